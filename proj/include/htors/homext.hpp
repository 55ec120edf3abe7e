#pragma once

#include <algorithm>
#include <bit>
#include <vector>

#include "htors/tuples.hpp"
#include "htors/universe.hpp"

namespace htors {

/// dim Hom(M_x, M_y): 1 iff x interleaves y, else 0.
inline int hom_dim(std::span<const Coord> x, std::span<const Coord> y,
                   const TupleUniverse& u) {
    u.index_of(x);
    u.index_of(y);
    return interleaves(x, y) ? 1 : 0;
}

/// dim Ext^d(M_y, M_x): 1 iff x interleaves tau(y), else 0. Orders matter:
/// a non-zero value means there is a d-extension 0 -> M_x -> ... -> M_y -> 0.
inline int ext_dim(std::span<const Coord> y, std::span<const Coord> x,
                   const TupleUniverse& u) {
    u.index_of(x);
    u.index_of(y);
    return interleaves(x, tau(y)) ? 1 : 0;
}

/// Middle terms of the unique non-trivial minimal d-extension
///   0 -> M_x -> E_1 -> ... -> E_d -> M_y -> 0,
/// where E_k is the direct sum of M_z over the k-th layer. Layer k holds the
/// universe members z with z_i in {x_i, y_i} per coordinate and exactly k
/// coordinates taken from y; positions where x_i = y_i are canonically read
/// as the x choice (they cannot occur when the extension exists, since then
/// x_i < y_i at every position).
struct ExtensionMiddleTerms {
    OsTuple source;                      // x
    OsTuple target;                      // y
    std::vector<std::vector<OsTuple>> layers; // layers[k-1] = Z_k, lex sorted
};

inline ExtensionMiddleTerms ext_middle_terms(std::span<const Coord> x,
                                             std::span<const Coord> y,
                                             const TupleUniverse& u) {
    if (ext_dim(y, x, u) != 1)
        throw UsageError("no d-extension: ext_dim = 0 for source " + tuple_to_string(x) +
                         " and target " + tuple_to_string(y));
    const int w = u.width();
    const int d = w - 1;
    if (w > 24) throw ResourceError("middle-term enumeration requires d <= 23");
    std::uint32_t tie_mask = 0;
    for (int i = 0; i < w; ++i)
        if (x[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(i)])
            tie_mask |= std::uint32_t{1} << i;

    ExtensionMiddleTerms out;
    out.source.assign(x.begin(), x.end());
    out.target.assign(y.begin(), y.end());
    out.layers.assign(static_cast<std::size_t>(d), {});

    OsTuple cand(static_cast<std::size_t>(w));
    const std::uint32_t masks = std::uint32_t{1} << w;
    for (std::uint32_t m = 0; m < masks; ++m) {
        if (m & tie_mask) continue; // canonical choice: prefer x on ties
        const int k = std::popcount(m);
        if (k < 1 || k > d) continue;
        bool nondec = true;
        for (int i = 0; i < w; ++i) {
            const Coord c = (m >> i) & 1 ? y[static_cast<std::size_t>(i)]
                                         : x[static_cast<std::size_t>(i)];
            if (i > 0 && c < cand[static_cast<std::size_t>(i - 1)]) {
                nondec = false;
                break;
            }
            cand[static_cast<std::size_t>(i)] = c;
        }
        if (nondec && u.contains(cand))
            out.layers[static_cast<std::size_t>(k - 1)].push_back(cand);
    }
    for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
    return out;
}

} // namespace htors
