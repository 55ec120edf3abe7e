#pragma once

#include <span>
#include <string>
#include <vector>

#include "htors/errors.hpp"

namespace htors {

using Coord = int;

/// A non-decreasing (d+1)-tuple of integers, written (x_0, ..., x_d). These
/// index the indecomposables of the ambient subcategory. Coordinates may be
/// negative (shifted windows, translates); non-decreasing is the only
/// structural requirement.
using OsTuple = std::vector<Coord>;

inline bool is_nondecreasing(std::span<const Coord> x) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] > x[i + 1]) return false;
    return true;
}

inline void require_same_length(std::span<const Coord> x, std::span<const Coord> y) {
    if (x.size() != y.size())
        throw UsageError("tuple length mismatch: " + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()));
}

/// Product order: x <= y coordinatewise.
inline bool leq(std::span<const Coord> x, std::span<const Coord> y) {
    require_same_length(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

/// The interleaving relation x_0 <= y_0 <= x_1 <= y_1 <= ... <= x_d <= y_d,
/// defined on arbitrary integer tuples. It refines the product order and
/// detects non-zero morphisms between the indexed indecomposables.
inline bool interleaves(std::span<const Coord> x, std::span<const Coord> y) {
    require_same_length(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
        if (i + 1 < x.size() && y[i] > x[i + 1]) return false;
    }
    return true;
}

/// Coordinatewise decrement, the index-level shadow of the higher
/// Auslander-Reiten translate. The result may leave every universe;
/// membership is always a separate check.
inline OsTuple tau(std::span<const Coord> x) {
    OsTuple out(x.begin(), x.end());
    for (auto& c : out) --c;
    return out;
}

/// Loewy length of the module indexed by y: y_d - y_0 + 1.
inline Coord loewy_length(std::span<const Coord> y) {
    if (y.empty()) throw UsageError("loewy_length of empty tuple");
    return y.back() - y.front() + 1;
}

inline std::string tuple_to_string(std::span<const Coord> x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    s += ')';
    return s;
}

} // namespace htors
