#pragma once

#include <stdexcept>
#include <string>

namespace htors {

// Malformed input: invalid series, tuples outside the universe, mismatched
// lengths, bad flag combinations. The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally valid input whose content is inconsistent, e.g. a class file
// that is not intersection-closed. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured cap (universe size, class count, scan size) would be
// exceeded. CLI exit code 3. Never truncate silently.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace htors
