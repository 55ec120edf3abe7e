#pragma once

#include <optional>
#include <string>

#include "htors/errors.hpp"
#include "htors/kupisch.hpp"
#include "htors/tuples.hpp"

namespace htors {

enum class AlgebraKind {
    auslander,          // higher Auslander algebra of type A_n
    nakayama_a,         // higher Nakayama algebra with a type-A Kupisch series
    nakayama_ainf,      // higher Nakayama, finite Kupisch series of type A-infinity
};

/// Ambient combinatorial setting: which algebra family, its parameters, and
/// the degree d. The formulas specialise consistently down to d = 1, where
/// they recover classical torsion classes of the linear A_n quiver, so d >= 1
/// is allowed throughout.
class Context {
public:
    static Context auslander(int n, int d) {
        require_d(d);
        if (n < 1) throw UsageError("n must be >= 1, got " + std::to_string(n));
        return Context(AlgebraKind::auslander, n, d, std::nullopt);
    }

    static Context nakayama_a(KupischSeries series, int d) {
        require_d(d);
        if (series.kind() != SeriesKind::type_a)
            throw UsageError("nakayama_a context requires a type-A kupisch series");
        const int n = static_cast<int>(series.size());
        return Context(AlgebraKind::nakayama_a, n, d, std::move(series));
    }

    static Context nakayama_ainf(KupischSeries series, int d) {
        require_d(d);
        if (series.kind() != SeriesKind::finite_ainf)
            throw UsageError("nakayama_ainf context requires a finite A-infinity kupisch series");
        const int n = static_cast<int>(series.size());
        return Context(AlgebraKind::nakayama_ainf, n, d, std::move(series));
    }

    AlgebraKind kind() const { return kind_; }
    int n() const { return n_; }
    int d() const { return d_; }
    int width() const { return d_ + 1; }

    const KupischSeries& series() const {
        if (!series_) throw UsageError("context has no kupisch series");
        return *series_;
    }

    /// Does the tuple index a module of this context's subcategory?
    /// Assumes x is non-decreasing and of the right width.
    bool admits(std::span<const Coord> x) const {
        switch (kind_) {
        case AlgebraKind::auslander:
            return x.front() >= 0 && x.back() < n_;
        case AlgebraKind::nakayama_a:
            if (x.front() < 0 || x.back() >= n_) return false;
            return loewy_length(x) <= series_->at(x.back());
        case AlgebraKind::nakayama_ainf:
            return loewy_length(x) <= series_->at(x.back());
        }
        return false;
    }

    friend bool operator==(const Context& a, const Context& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.d_ == b.d_ && a.series_ == b.series_;
    }

    std::string describe() const {
        switch (kind_) {
        case AlgebraKind::auslander:
            return "auslander(n=" + std::to_string(n_) + ", d=" + std::to_string(d_) + ")";
        case AlgebraKind::nakayama_a:
            return "nakayama_a(|l|=" + std::to_string(n_) + ", d=" + std::to_string(d_) + ")";
        case AlgebraKind::nakayama_ainf:
            return "nakayama_ainf(window=" + std::to_string(n_) + ", d=" + std::to_string(d_) + ")";
        }
        return "?";
    }

private:
    static void require_d(int d) {
        if (d < 1) throw UsageError("d must be >= 1, got " + std::to_string(d));
    }

    Context(AlgebraKind kind, int n, int d, std::optional<KupischSeries> series)
        : kind_(kind), n_(n), d_(d), series_(std::move(series)) {}

    AlgebraKind kind_;
    int n_;
    int d_;
    std::optional<KupischSeries> series_;
};

} // namespace htors
