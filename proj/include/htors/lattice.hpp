#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "htors/closure.hpp"
#include "htors/enumerate.hpp"

namespace htors {

/// Meet of two torsion classes: their intersection, which is again a torsion
/// class. Both inputs and the result are checked.
inline ModuleSet meet(const ModuleSet& a, const ModuleSet& b) {
    if (!is_torsion_class(a) || !is_torsion_class(b))
        throw UsageError("meet requires torsion classes as inputs");
    ModuleSet out = a & b;
    if (!is_torsion_class(out))
        throw DataError("intersection of torsion classes failed the membership test");
    return out;
}

/// Join of two torsion classes: the smallest torsion class containing their
/// union.
inline ModuleSet join(const ModuleSet& a, const ModuleSet& b) {
    if (!is_torsion_class(a) || !is_torsion_class(b))
        throw UsageError("join requires torsion classes as inputs");
    return generate_minimal(a | b);
}

/// The lattice of a complete collection: cover relations (transitive
/// reduction of inclusion) over the collection's canonical indices, plus the
/// unique top and bottom.
struct TorsionLattice {
    std::size_t num_classes = 0;
    std::vector<std::pair<std::size_t, std::size_t>> covers; // (upper, lower), sorted
    std::size_t top = 0;
    std::size_t bottom = 0;
};

/// Covers of a class U are the inclusion-minimal closures of U plus one
/// extra module: any class V strictly above U contains such a closure, so
/// the minimal ones are exactly the upper neighbours.
inline TorsionLattice build_hasse(const ClassCollection& c) {
    const TupleUniverse& u = c.universe();
    TorsionLattice lat;
    lat.num_classes = c.size();
    ClosureEngine engine(u);
    Bitset scratch(u.size());
    std::vector<std::size_t> ups;
    for (std::size_t ci = 0; ci < c.size(); ++ci) {
        const Bitset& base = c.at(ci);
        ups.clear();
        for (std::size_t x = 0; x < u.size(); ++x) {
            if (base.test(x)) continue;
            scratch = base;
            scratch.set(x);
            engine.close(scratch);
            auto idx = c.find(scratch);
            if (!idx)
                throw DataError("collection is not saturated: closure of a class plus one "
                                "module is missing");
            ups.push_back(*idx);
        }
        std::sort(ups.begin(), ups.end());
        ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
        for (std::size_t vi : ups) {
            bool minimal = true;
            for (std::size_t wi : ups) {
                if (wi != vi && c.at(wi).is_subset_of(c.at(vi))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) lat.covers.emplace_back(vi, ci);
        }
    }
    std::sort(lat.covers.begin(), lat.covers.end());
    auto bottom = c.find(Bitset(u.size()));
    auto top = c.find(Bitset::all_set(u.size()));
    if (!bottom || !top) throw DataError("collection lacks the empty or the full class");
    lat.bottom = *bottom;
    lat.top = *top;
    return lat;
}

/// Meet and join of every pair, as indices into the collection. Fails if the
/// collection is not a complete lattice.
struct LatticeTables {
    std::size_t n = 0;
    std::vector<std::uint32_t> meet_idx; // n*n
    std::vector<std::uint32_t> join_idx; // n*n
    std::uint32_t meet(std::size_t i, std::size_t j) const { return meet_idx[i * n + j]; }
    std::uint32_t join(std::size_t i, std::size_t j) const { return join_idx[i * n + j]; }
};

inline LatticeTables build_tables(const ClassCollection& c) {
    LatticeTables t;
    t.n = c.size();
    t.meet_idx.assign(t.n * t.n, 0);
    t.join_idx.assign(t.n * t.n, 0);
    ClosureEngine engine(c.universe());
    Bitset scratch(c.universe().size());
    for (std::size_t i = 0; i < t.n; ++i) {
        for (std::size_t j = i; j < t.n; ++j) {
            scratch = c.at(i);
            scratch &= c.at(j);
            auto m = c.find(scratch);
            if (!m) throw DataError("pairwise intersection missing from the collection");
            scratch = c.at(i);
            scratch |= c.at(j);
            engine.close(scratch);
            auto jo = c.find(scratch);
            if (!jo) throw DataError("pairwise join missing from the collection");
            t.meet_idx[i * t.n + j] = t.meet_idx[j * t.n + i] = static_cast<std::uint32_t>(*m);
            t.join_idx[i * t.n + j] = t.join_idx[j * t.n + i] = static_cast<std::uint32_t>(*jo);
        }
    }
    return t;
}

inline constexpr std::size_t default_semidistributive_node_cap = 2000;

struct SemidistributivityWitness {
    std::string law; // "join" or "meet"
    std::size_t a, b, c;
};

struct SemidistributivityReport {
    bool join_sd = true;
    bool meet_sd = true;
    std::optional<SemidistributivityWitness> witness; // first violation in (a,b,c) order
};

/// Exhaustive triple scan of both semidistributive laws:
///   join: a v b = a v c  implies  a v b = a v (b ^ c)
///   meet: a ^ b = a ^ c  implies  a ^ b = a ^ (b v c)
inline SemidistributivityReport check_semidistributive(
    const ClassCollection& c, const LatticeTables& t,
    std::size_t node_cap = default_semidistributive_node_cap, bool force = false) {
    const std::size_t n = c.size();
    if (n > node_cap && !force)
        throw ResourceError("semidistributivity scan over " + std::to_string(n) +
                            " nodes exceeds cap of " + std::to_string(node_cap));
    SemidistributivityReport rep;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (rep.join_sd && t.join(a, b) == t.join(a, cc) &&
                    t.join(a, b) != t.join(a, t.meet(b, cc))) {
                    rep.join_sd = false;
                    if (!rep.witness) rep.witness = {"join", a, b, cc};
                }
                if (rep.meet_sd && t.meet(a, b) == t.meet(a, cc) &&
                    t.meet(a, b) != t.meet(a, t.join(b, cc))) {
                    rep.meet_sd = false;
                    if (!rep.witness) rep.witness = {"meet", a, b, cc};
                }
                if (!rep.join_sd && !rep.meet_sd) return rep;
            }
        }
    }
    return rep;
}

struct RegularityReport {
    bool regular = true;
    std::vector<std::pair<std::size_t, std::size_t>> degree_multiset; // (degree, count), sorted
};

/// Valency check on the Hasse diagram: degree of a node is its total number
/// of incident cover edges, in plus out.
inline RegularityReport check_hasse_regular(const TorsionLattice& lat) {
    const std::size_t n = lat.num_classes;
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [upper, lower] : lat.covers) {
        ++deg[upper];
        ++deg[lower];
    }
    std::vector<std::pair<std::size_t, std::size_t>> hist;
    for (std::size_t i = 0; i < n; ++i) {
        auto it = std::find_if(hist.begin(), hist.end(),
                               [&](const auto& p) { return p.first == deg[i]; });
        if (it == hist.end())
            hist.emplace_back(deg[i], 1);
        else
            ++it->second;
    }
    std::sort(hist.begin(), hist.end());
    RegularityReport rep;
    rep.degree_multiset = std::move(hist);
    rep.regular = rep.degree_multiset.size() <= 1;
    return rep;
}

} // namespace htors
