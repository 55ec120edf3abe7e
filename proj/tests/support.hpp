// Test-side oracles, independent of the enumeration and lattice paths they
// check: closed-form counting, exhaustive subset filtering, pairwise
// transitive reduction, and reproducible random generator sets.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <htors/htors.hpp>

namespace testsup {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

inline std::uint64_t catalan(std::uint64_t k) { return binomial(2 * k, k) / (k + 1); }

/// Filter all 2^N subsets of the universe through the membership test.
inline std::vector<htors::Bitset> brute_force_classes(const htors::TupleUniverse& u) {
    const std::size_t n = u.size();
    if (n > 20) throw std::runtime_error("brute force limited to 20 tuples");
    std::vector<htors::Bitset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        htors::Bitset b(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) b.set(i);
        if (htors::is_torsion_class(htors::ModuleSet(u, b))) out.push_back(std::move(b));
    }
    return out;
}

/// Transitive reduction of strict inclusion by the O(N^3) pairwise scan.
inline std::vector<std::pair<std::size_t, std::size_t>>
reduction_by_inclusion(const htors::ClassCollection& c) {
    const std::size_t n = c.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !c.at(b).is_subset_of(c.at(a))) continue;
            bool direct = true;
            for (std::size_t m = 0; m < n; ++m) {
                if (m == a || m == b) continue;
                if (c.at(b).is_subset_of(c.at(m)) && c.at(m).is_subset_of(c.at(a))) {
                    direct = false;
                    break;
                }
            }
            if (direct) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Reproducible random subset of the universe with roughly `expected` members.
inline htors::Bitset random_subset(const htors::TupleUniverse& u, std::mt19937_64& rng,
                                   std::size_t expected) {
    htors::Bitset b(u.size());
    if (u.size() == 0) return b;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double p = std::min(1.0, static_cast<double>(expected) / static_cast<double>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        if (coin(rng) < p) b.set(i);
    return b;
}

} // namespace testsup
