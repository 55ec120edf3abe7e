#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "htors/bitset.hpp"
#include "htors/context.hpp"
#include "htors/errors.hpp"
#include "htors/tuples.hpp"

namespace htors {

inline constexpr std::size_t default_universe_cap = 4096;

/// The ordered, finite set of index tuples of a context, with the relation
/// tables every torsion-class computation needs:
///
///   dq_row(i)   = { j : x_i <= x_j and the last coordinates agree },
///                 the quotient-closure up-set of x_i inside this universe;
///   ext_from(i) = { j : x_i interleaves tau(x_j) }, i.e. there is a
///                 non-trivial d-extension from M_{x_i} to M_{x_j};
///   ext_to(j)   = transpose of ext_from.
///
/// Tuples are stored in strictly increasing lexicographic order; that order
/// defines every canonical serialisation downstream. Immutable after build,
/// safe to share across threads.
class TupleUniverse {
public:
    static TupleUniverse build(const Context& ctx,
                               std::size_t max_tuples = default_universe_cap) {
        TupleUniverse u(ctx);
        u.enumerate_tuples(max_tuples);
        u.build_tables();
        return u;
    }

    const Context& context() const { return ctx_; }
    std::size_t size() const { return tuples_.size(); }
    int width() const { return ctx_.width(); }

    const OsTuple& tuple(std::size_t i) const { return tuples_[i]; }
    const std::vector<OsTuple>& tuples() const { return tuples_; }

    std::optional<std::size_t> find(std::span<const Coord> x) const {
        auto it = std::lower_bound(tuples_.begin(), tuples_.end(), x,
                                   [](const OsTuple& a, std::span<const Coord> b) {
                                       return std::lexicographical_compare(
                                           a.begin(), a.end(), b.begin(), b.end());
                                   });
        if (it == tuples_.end() || it->size() != x.size() ||
            !std::equal(it->begin(), it->end(), x.begin()))
            return std::nullopt;
        return static_cast<std::size_t>(it - tuples_.begin());
    }

    bool contains(std::span<const Coord> x) const { return find(x).has_value(); }

    /// Index of x, or UsageError naming the tuple.
    std::size_t index_of(std::span<const Coord> x) const {
        auto i = find(x);
        if (!i)
            throw UsageError("tuple " + tuple_to_string(x) + " is not in the universe of " +
                             ctx_.describe());
        return *i;
    }

    const Bitset& dq_row(std::size_t i) const { return dq_row_[i]; }
    const Bitset& ext_from(std::size_t i) const { return ext_from_[i]; }
    const Bitset& ext_to(std::size_t i) const { return ext_to_[i]; }

    bool ext_pair(std::size_t i, std::size_t j) const { return ext_from_[i].test(j); }

    /// Index of (x_0, ..., x_{d-1}, z_d) for an ext pair (i, j) = (x, z). In an
    /// Auslander universe this tuple always exists; elsewhere it may not.
    std::int32_t top_mix(std::size_t i, std::size_t j) const {
        if (!top_mix_.empty()) return top_mix_[i * size() + j];
        OsTuple t = tuples_[i];
        t.back() = tuples_[j].back();
        auto idx = find(t);
        return idx ? static_cast<std::int32_t>(*idx) : -1;
    }

    /// Visit every universe member that mixes the coordinates of tuples i and
    /// j (choosing x_i or z_i per position). Order unspecified; duplicates
    /// possible only when the tuples share coordinates.
    template <class F>
    void for_each_mixture(std::size_t i, std::size_t j, F&& f) const {
        const OsTuple& x = tuples_[i];
        const OsTuple& z = tuples_[j];
        const int w = width();
        if (w > mixture_width_cap)
            throw ResourceError("mixture enumeration requires d <= " +
                                std::to_string(mixture_width_cap - 1));
        OsTuple cand(static_cast<std::size_t>(w));
        const std::uint32_t masks = std::uint32_t{1} << w;
        for (std::uint32_t m = 0; m < masks; ++m) {
            bool ok = true;
            for (int k = 0; k < w; ++k) {
                const Coord c = (m >> k) & 1 ? z[static_cast<std::size_t>(k)]
                                             : x[static_cast<std::size_t>(k)];
                if (k > 0 && c < cand[static_cast<std::size_t>(k - 1)]) {
                    ok = false;
                    break;
                }
                cand[static_cast<std::size_t>(k)] = c;
            }
            if (!ok) continue;
            if (auto idx = find(cand)) f(*idx);
        }
    }

    /// Sorted, deduplicated mixture indices; used where scan order must be
    /// canonical.
    std::vector<std::size_t> mixture_indices(std::size_t i, std::size_t j) const {
        std::vector<std::size_t> out;
        for_each_mixture(i, j, [&](std::size_t k) { out.push_back(k); });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Vertices supporting the module indexed by x: the d-tuples y with
    /// x_0 <= y_0 <= x_1 <= ... <= y_{d-1} <= x_d, restricted to the
    /// context's vertex set for Nakayama families. The cardinality is the
    /// total dimension of M_x.
    std::vector<OsTuple> module_support(std::span<const Coord> x) const {
        index_of(x); // domain check
        const int w = width();
        std::vector<OsTuple> out;
        OsTuple y(static_cast<std::size_t>(w - 1));
        support_rec(x, y, 0, out);
        return out;
    }

private:
    static constexpr int mixture_width_cap = 24;
    static constexpr std::size_t top_mix_table_cap = 2048;

    explicit TupleUniverse(Context ctx) : ctx_(std::move(ctx)) {}

    void support_rec(std::span<const Coord> x, OsTuple& y, int k,
                     std::vector<OsTuple>& out) const {
        const int w = width();
        if (k == w - 1) {
            if (vertex_admitted(y)) out.push_back(y);
            return;
        }
        for (Coord c = x[static_cast<std::size_t>(k)];
             c <= x[static_cast<std::size_t>(k + 1)]; ++c) {
            y[static_cast<std::size_t>(k)] = c;
            support_rec(x, y, k + 1, out);
        }
    }

    bool vertex_admitted(std::span<const Coord> y) const {
        switch (ctx_.kind()) {
        case AlgebraKind::auslander:
            return true;
        case AlgebraKind::nakayama_a:
        case AlgebraKind::nakayama_ainf:
            return loewy_length(y) <= ctx_.series().at(y.back());
        }
        return false;
    }

    void enumerate_tuples(std::size_t max_tuples) {
        Coord lo = 0, hi = -1;
        switch (ctx_.kind()) {
        case AlgebraKind::auslander: {
            lo = 0;
            hi = ctx_.n() - 1;
            // The count is binomial(n+d, d+1); refuse oversized universes
            // before enumerating them.
            unsigned long long c = 1;
            const int w = ctx_.width();
            for (int k = 1; k <= w; ++k) {
                c = c * static_cast<unsigned long long>(ctx_.n() - 1 + k) /
                    static_cast<unsigned long long>(k);
                if (c > max_tuples)
                    throw ResourceError("universe for " + ctx_.describe() + " exceeds cap of " +
                                        std::to_string(max_tuples) + " tuples");
            }
            break;
        }
        case AlgebraKind::nakayama_a:
            lo = 0;
            hi = ctx_.n() - 1;
            break;
        case AlgebraKind::nakayama_ainf: {
            const auto& s = ctx_.series();
            if (s.empty()) return; // empty window, empty universe
            bool seen = false;
            for (std::size_t i = 0; i < s.size(); ++i) {
                const int pos = s.offset() + static_cast<int>(i);
                const int l = s.values()[i];
                if (l >= 1) {
                    const Coord start = pos - l + 1;
                    if (!seen || start < lo) lo = start;
                    hi = pos;
                    seen = true;
                }
            }
            if (!seen) return;
            break;
        }
        }
        if (hi < lo) return;

        OsTuple t(static_cast<std::size_t>(ctx_.width()), lo);
        while (true) {
            if (ctx_.admits(t)) {
                tuples_.push_back(t);
                if (tuples_.size() > max_tuples)
                    throw ResourceError("universe for " + ctx_.describe() + " exceeds cap of " +
                                        std::to_string(max_tuples) + " tuples");
            }
            // next non-decreasing tuple over [lo, hi], lexicographic
            int k = ctx_.width() - 1;
            while (k >= 0 && t[static_cast<std::size_t>(k)] == hi) --k;
            if (k < 0) break;
            const Coord v = ++t[static_cast<std::size_t>(k)];
            for (int m = k + 1; m < ctx_.width(); ++m) t[static_cast<std::size_t>(m)] = v;
        }
    }

    void build_tables() {
        const std::size_t n = tuples_.size();
        dq_row_.assign(n, Bitset(n));
        ext_from_.assign(n, Bitset(n));
        ext_to_.assign(n, Bitset(n));
        std::vector<OsTuple> taus(n);
        for (std::size_t j = 0; j < n; ++j) taus[j] = tau(tuples_[j]);
        for (std::size_t i = 0; i < n; ++i) {
            const OsTuple& x = tuples_[i];
            for (std::size_t j = 0; j < n; ++j) {
                const OsTuple& y = tuples_[j];
                if (x.back() == y.back() && leq(x, y)) dq_row_[i].set(j);
                if (interleaves(x, taus[j])) {
                    ext_from_[i].set(j);
                    ext_to_[j].set(i);
                }
            }
        }
        if (ctx_.kind() == AlgebraKind::auslander && n <= top_mix_table_cap) {
            top_mix_.assign(n * n, -1);
            OsTuple t;
            for (std::size_t i = 0; i < n; ++i) {
                t = tuples_[i];
                ext_from_[i].for_each([&](std::size_t j) {
                    t.back() = tuples_[j].back();
                    auto idx = find(t);
                    top_mix_[i * n + j] = idx ? static_cast<std::int32_t>(*idx) : -1;
                });
            }
        }
    }

    Context ctx_;
    std::vector<OsTuple> tuples_;
    std::vector<Bitset> dq_row_;
    std::vector<Bitset> ext_from_;
    std::vector<Bitset> ext_to_;
    std::vector<std::int32_t> top_mix_;
};

} // namespace htors
