#pragma once

#include <optional>
#include <vector>

#include "htors/bitset.hpp"
#include "htors/module_set.hpp"
#include "htors/universe.hpp"

namespace htors {

/// Quotient closure of a single indecomposable: the up-set
/// { y in the universe : x <= y and x_d = y_d }. This is the smallest
/// torsion class containing M_x in an Auslander universe.
inline ModuleSet dq_single(std::span<const Coord>, const TupleUniverse&&) = delete;

inline ModuleSet dq_single(std::span<const Coord> x, const TupleUniverse& u) {
    return ModuleSet(u, u.dq_row(u.index_of(x)));
}

/// Quotient closure of a set: the union of the members' up-sets. A single
/// pass suffices because y in dq(x) implies dq(y) subset of dq(x).
inline ModuleSet dq_set(const ModuleSet& s) {
    const TupleUniverse& u = s.universe();
    Bitset out(u.size());
    s.bits().for_each([&](std::size_t i) { out |= u.dq_row(i); });
    return ModuleSet(u, std::move(out));
}

/// A failed torsion-class check, as the canonically first violating triple.
/// condition 1: x in the set, z = y missing from its quotient up-set.
/// condition 2: x, z in the set with an extension between them, mixture y
/// missing.
struct TorsionViolation {
    int condition; // 1 or 2
    std::size_t x, z, y;
};

/// Membership test for d-torsion classes: the set must contain every
/// quotient up-set of its members (condition 1) and, for every pair x, z in
/// the set with a non-trivial extension x ~> tau(z), every in-universe
/// coordinate mixture of x and z (condition 2). Scans (x, z, y) in canonical
/// order and reports the first violation.
inline std::optional<TorsionViolation> find_torsion_violation(const ModuleSet& s) {
    const TupleUniverse& u = s.universe();
    const Bitset& I = s.bits();
    const std::size_t n = u.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (!I.test(x)) continue;
        for (std::size_t z = 0; z < n; ++z) {
            if (!I.test(z)) {
                if (u.dq_row(x).test(z)) return TorsionViolation{1, x, z, z};
                continue;
            }
            if (!u.ext_pair(x, z)) continue;
            for (std::size_t y : u.mixture_indices(x, z))
                if (!I.test(y)) return TorsionViolation{2, x, z, y};
        }
    }
    return std::nullopt;
}

inline bool is_torsion_class(const ModuleSet& s) {
    return !find_torsion_violation(s).has_value();
}

/// How a closure pass inserts the modules forced by extensions between pairs
/// of current members.
enum class ClosureRule {
    /// Insert only (x_0, ..., x_{d-1}, z_d) per extension pair, then
    /// quotient-close. Valid in Auslander universes, where the remaining
    /// middle terms follow from the quotient step.
    last_coord,
    /// Insert every in-universe coordinate mixture of the pair. Valid in all
    /// universes; this is the conditions of the membership test run as a
    /// least fixpoint.
    mixtures,
};

enum class ScanMode {
    frontier,    // only pairs touching elements added in the previous round
    full_rescan, // re-scan all pairs every round
};

inline ClosureRule default_rule(const TupleUniverse& u) {
    return u.context().kind() == AlgebraKind::auslander ? ClosureRule::last_coord
                                                        : ClosureRule::mixtures;
}

/// Fixpoint engine computing minimal torsion classes. Owns its scratch
/// buffers so enumeration loops can run millions of closures without
/// allocating; one engine per thread.
class ClosureEngine {
public:
    explicit ClosureEngine(const TupleUniverse& u)
        : ClosureEngine(u, default_rule(u), ScanMode::frontier) {}
    explicit ClosureEngine(const TupleUniverse&&) = delete;
    ClosureEngine(const TupleUniverse&&, ClosureRule, ScanMode) = delete;

    ClosureEngine(const TupleUniverse& u, ClosureRule rule, ScanMode scan)
        : u_(&u), rule_(rule), scan_(scan), frontier_(u.size()), fresh_(u.size()),
          grown_(u.size()) {
        if (rule == ClosureRule::last_coord &&
            u.context().kind() != AlgebraKind::auslander)
            throw UsageError("last-coordinate closure rule is only valid in Auslander universes");
    }

    /// Replace the given member set by the smallest torsion class containing
    /// it.
    void close(Bitset& io) {
        const TupleUniverse& u = *u_;
        // quotient-close the seed
        grown_.clear();
        io.for_each([&](std::size_t m) { grown_ |= u.dq_row(m); });
        io = grown_;
        frontier_ = io;
        while (frontier_.any()) {
            fresh_.clear();
            bool found = false;
            const Bitset& scanned = scan_ == ScanMode::frontier ? frontier_ : io;
            scanned.for_each([&](std::size_t a) {
                // pairs (a, b): extension from a to b
                for_each_in_intersection(u.ext_from(a), io, [&](std::size_t b) {
                    insert_forced(a, b, io, found);
                });
                if (scan_ == ScanMode::frontier) {
                    // pairs (b, a) with b settled before this round
                    for_each_in_intersection_minus(
                        u.ext_to(a), io, frontier_,
                        [&](std::size_t b) { insert_forced(b, a, io, found); });
                }
            });
            if (!found) break;
            grown_.clear();
            fresh_.for_each([&](std::size_t t) { grown_ |= u.dq_row(t); });
            grown_.subtract(io);
            io |= grown_;
            frontier_ = grown_;
        }
    }

private:
    void insert_forced(std::size_t a, std::size_t b, const Bitset& io, bool& found) {
        const TupleUniverse& u = *u_;
        if (rule_ == ClosureRule::last_coord) {
            const std::int32_t t = u.top_mix(a, b);
            if (t >= 0 && !io.test(static_cast<std::size_t>(t))) {
                fresh_.set(static_cast<std::size_t>(t));
                found = true;
            }
        } else {
            u.for_each_mixture(a, b, [&](std::size_t t) {
                if (!io.test(t)) {
                    fresh_.set(t);
                    found = true;
                }
            });
        }
    }

    const TupleUniverse* u_;
    ClosureRule rule_;
    ScanMode scan_;
    Bitset frontier_;
    Bitset fresh_;
    Bitset grown_;
};

/// Smallest torsion class containing the given modules. Duplicated
/// generators are harmless. Dispatches to the last-coordinate rule in
/// Auslander universes and the mixture fixpoint elsewhere.
inline ModuleSet generate_minimal(const ModuleSet& gens) {
    ModuleSet out = gens;
    ClosureEngine engine(gens.universe());
    engine.close(out.bits());
    return out;
}

inline ModuleSet generate_minimal(const std::vector<OsTuple>&, const TupleUniverse&&) = delete;

inline ModuleSet generate_minimal(const std::vector<OsTuple>& gens, const TupleUniverse& u) {
    return generate_minimal(ModuleSet::of_tuples(u, gens));
}

/// Variant with explicit rule/scan choice; the test suite asserts all
/// combinations agree where they are defined.
inline ModuleSet generate_minimal(const ModuleSet& gens, ClosureRule rule, ScanMode scan) {
    ModuleSet out = gens;
    ClosureEngine engine(gens.universe(), rule, scan);
    engine.close(out.bits());
    return out;
}

} // namespace htors
