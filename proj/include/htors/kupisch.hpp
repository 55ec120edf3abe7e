#pragma once

#include <string>
#include <vector>

#include "htors/errors.hpp"

namespace htors {

enum class SeriesKind {
    type_a,      // l_0 = 1 and 2 <= l_i <= l_{i-1}+1
    finite_ainf, // finite window inside an A-double-infinity series
};

/// Kupisch series: the tuple of Loewy-length bounds defining a (higher)
/// Nakayama algebra. A finite_ainf series lists a finite window of positions;
/// entries outside the window are implicitly 0, and the window is normalised
/// by trimming leading/trailing zeros.
class KupischSeries {
public:
    static KupischSeries type_a(std::vector<int> values) {
        if (values.empty())
            throw UsageError("kupisch series of type A must be non-empty");
        if (values.front() != 1)
            throw UsageError("kupisch series of type A: l_0 must equal 1, got " +
                             std::to_string(values.front()));
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] < 2)
                throw UsageError("kupisch series of type A: l_" + std::to_string(i) +
                                 " = " + std::to_string(values[i]) +
                                 " violates l_i >= 2");
            if (values[i] > values[i - 1] + 1)
                throw UsageError("kupisch series of type A: l_" + std::to_string(i) +
                                 " = " + std::to_string(values[i]) +
                                 " violates l_i <= l_{i-1}+1 = " +
                                 std::to_string(values[i - 1] + 1));
        }
        return KupischSeries(SeriesKind::type_a, std::move(values), 0);
    }

    static KupischSeries finite_ainf(std::vector<int> values, int offset = 0) {
        // Trim to the canonical window.
        std::size_t lo = 0, hi = values.size();
        while (lo < hi && values[lo] == 0) ++lo;
        while (hi > lo && values[hi - 1] == 0) --hi;
        std::vector<int> window(values.begin() + static_cast<std::ptrdiff_t>(lo),
                                values.begin() + static_cast<std::ptrdiff_t>(hi));
        const int base = offset + static_cast<int>(lo);
        int prev = 0; // implicit zero just before the window
        for (std::size_t i = 0; i < window.size(); ++i) {
            const int pos = base + static_cast<int>(i);
            if (window[i] < 0)
                throw UsageError("kupisch series: l_" + std::to_string(pos) +
                                 " = " + std::to_string(window[i]) + " is negative");
            if (window[i] > prev + 1)
                throw UsageError("kupisch series: l_" + std::to_string(pos) + " = " +
                                 std::to_string(window[i]) +
                                 " violates l_i <= l_{i-1}+1 = " + std::to_string(prev + 1));
            prev = window[i];
        }
        const int norm_offset = window.empty() ? 0 : base;
        return KupischSeries(SeriesKind::finite_ainf, std::move(window), norm_offset);
    }

    SeriesKind kind() const { return kind_; }
    const std::vector<int>& values() const { return values_; }
    int offset() const { return offset_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// Loewy bound at an absolute position; 0 outside the listed window.
    int at(int position) const {
        const int rel = position - offset_;
        if (rel < 0 || rel >= static_cast<int>(values_.size())) return 0;
        return values_[static_cast<std::size_t>(rel)];
    }

    friend bool operator==(const KupischSeries& a, const KupischSeries& b) {
        return a.kind_ == b.kind_ && a.offset_ == b.offset_ && a.values_ == b.values_;
    }

private:
    KupischSeries(SeriesKind kind, std::vector<int> values, int offset)
        : kind_(kind), values_(std::move(values)), offset_(offset) {}

    SeriesKind kind_;
    std::vector<int> values_;
    int offset_ = 0;
};

} // namespace htors
