#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "htors/closure.hpp"
#include "htors/module_set.hpp"
#include "htors/universe.hpp"

namespace htors {

enum class EnumAlgorithm {
    incremental, // breadth-first join saturation from the empty class
    levelwise,   // generator-set sweep by size l = 1, 2, ...
};

struct EnumerateOptions {
    EnumAlgorithm algorithm = EnumAlgorithm::incremental;
    unsigned workers = 1;
    std::size_t max_classes = 1'000'000;
    std::size_t max_universe = default_universe_cap;
    bool validate = true; // post-run intersection-closure check (capped)
};

/// The complete set of torsion classes of a universe, held in canonical
/// order: by cardinality, then lexicographically on member lists. Node ids
/// used in Hasse output are positions in this order.
class ClassCollection {
public:
    ClassCollection(const TupleUniverse&&, std::vector<Bitset>) = delete;

    ClassCollection(const TupleUniverse& u, std::vector<Bitset> classes)
        : u_(&u), classes_(std::move(classes)) {
        std::sort(classes_.begin(), classes_.end(), canonical_less);
        classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
        index_.reserve(classes_.size());
        for (std::size_t i = 0; i < classes_.size(); ++i) index_.emplace(classes_[i], i);
    }

    const TupleUniverse& universe() const { return *u_; }
    std::size_t size() const { return classes_.size(); }
    const Bitset& at(std::size_t i) const { return classes_[i]; }
    ModuleSet module_set(std::size_t i) const { return ModuleSet(*u_, classes_[i]); }

    std::optional<std::size_t> find(const Bitset& b) const {
        auto it = index_.find(b);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    const TupleUniverse* u_;
    std::vector<Bitset> classes_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

namespace detail {

inline void run_on_workers(unsigned workers, const std::function<void(unsigned)>& body) {
    if (workers <= 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
}

} // namespace detail

/// Post-enumeration invariant check: the collection contains the empty and
/// the full class and is closed under pairwise intersection. The quadratic
/// scan is skipped above the cap.
inline void validate_collection(const ClassCollection& c, unsigned workers = 1,
                                std::size_t pairwise_cap = 25'000) {
    const TupleUniverse& u = c.universe();
    if (!c.find(Bitset(u.size())))
        throw DataError("collection is missing the empty class");
    if (!c.find(Bitset::all_set(u.size())))
        throw DataError("collection is missing the full universe");
    const std::size_t n = c.size();
    if (n > pairwise_cap) return;
    std::atomic<bool> ok{true};
    detail::run_on_workers(workers, [&](unsigned w) {
        Bitset tmp;
        for (std::size_t i = w; i < n && ok.load(std::memory_order_relaxed); i += std::max(1u, workers)) {
            for (std::size_t j = i + 1; j < n; ++j) {
                tmp = c.at(i);
                tmp &= c.at(j);
                if (!c.find(tmp)) {
                    ok.store(false, std::memory_order_relaxed);
                    break;
                }
            }
        }
    });
    if (!ok.load())
        throw DataError("collection is not closed under pairwise intersection");
}

/// Breadth-first saturation: starting from the empty class, repeatedly close
/// every known class together with one extra module. Complete because the
/// closure of a subset of a class stays inside that class, so the chain of
/// single-module extensions reaches every class. Output is independent of
/// worker count and traversal order.
inline ClassCollection enumerate_incremental(const TupleUniverse&&,
                                             const EnumerateOptions& = {}) = delete;

inline ClassCollection enumerate_incremental(const TupleUniverse& u,
                                             const EnumerateOptions& opts = {}) {
    if (u.size() > opts.max_universe)
        throw ResourceError("universe size " + std::to_string(u.size()) + " exceeds cap of " +
                            std::to_string(opts.max_universe));
    const unsigned workers = std::max(1u, opts.workers);
    std::unordered_set<Bitset, BitsetHash> store;
    Bitset empty(u.size());
    store.insert(empty);
    std::vector<Bitset> frontier{empty};

    while (!frontier.empty()) {
        std::vector<std::vector<Bitset>> found(workers);
        detail::run_on_workers(workers, [&](unsigned w) {
            ClosureEngine engine(u);
            std::unordered_set<Bitset, BitsetHash> seen;
            Bitset scratch(u.size());
            for (std::size_t fi = w; fi < frontier.size(); fi += workers) {
                const Bitset& base = frontier[fi];
                for (std::size_t x = 0; x < u.size(); ++x) {
                    if (base.test(x)) continue;
                    scratch = base;
                    scratch.set(x);
                    engine.close(scratch);
                    if (store.count(scratch) || seen.count(scratch)) continue;
                    seen.insert(scratch);
                    found[w].push_back(scratch);
                }
            }
        });
        frontier.clear();
        for (auto& part : found) {
            for (auto& b : part) {
                if (store.insert(b).second) {
                    if (store.size() > opts.max_classes)
                        throw ResourceError("class count exceeds cap of " +
                                            std::to_string(opts.max_classes));
                    frontier.push_back(std::move(b));
                }
            }
        }
    }

    ClassCollection out(u, std::vector<Bitset>(store.begin(), store.end()));
    if (opts.validate) validate_collection(out, workers);
    return out;
}

/// Generator-set sweep: for l = 1, 2, ... close every l-subset of the
/// universe and stop when a whole level contributes nothing new. Subsets
/// containing two members of one quotient up-set are skipped, since dropping
/// the larger member leaves the closure unchanged; the recursion therefore
/// only visits dq-antichains. Defined for Auslander and type-A Nakayama
/// universes.
inline ClassCollection enumerate_levelwise(const TupleUniverse&&,
                                           const EnumerateOptions& = {}) = delete;

inline ClassCollection enumerate_levelwise(const TupleUniverse& u,
                                           const EnumerateOptions& opts = {}) {
    if (u.context().kind() == AlgebraKind::nakayama_ainf)
        throw UsageError("levelwise enumeration handles Auslander and type-A Nakayama "
                         "contexts; decompose the series into blocks first");
    if (u.size() > opts.max_universe)
        throw ResourceError("universe size " + std::to_string(u.size()) + " exceeds cap of " +
                            std::to_string(opts.max_universe) +
                            "; use the incremental algorithm");
    const std::size_t n = u.size();
    std::unordered_set<Bitset, BitsetHash> store;
    store.insert(Bitset(n));
    ClosureEngine engine(u);
    Bitset scratch(n);
    std::vector<std::size_t> chosen;

    std::function<void(std::size_t, std::size_t, bool&)> sweep =
        [&](std::size_t start, std::size_t want, bool& added) {
            if (want == 0) {
                scratch.clear();
                for (auto i : chosen) scratch.set(i);
                engine.close(scratch);
                if (store.insert(scratch).second) {
                    added = true;
                    if (store.size() > opts.max_classes)
                        throw ResourceError("class count exceeds cap of " +
                                            std::to_string(opts.max_classes));
                }
                return;
            }
            for (std::size_t j = start; j + want <= n; ++j) {
                bool compatible = true;
                for (auto i : chosen) {
                    if (u.dq_row(i).test(j) || u.dq_row(j).test(i)) {
                        compatible = false;
                        break;
                    }
                }
                if (!compatible) continue;
                chosen.push_back(j);
                sweep(j + 1, want - 1, added);
                chosen.pop_back();
            }
        };

    for (std::size_t l = 1; l <= n; ++l) {
        bool added = false;
        sweep(0, l, added);
        if (!added) break;
    }

    ClassCollection out(u, std::vector<Bitset>(store.begin(), store.end()));
    if (opts.validate) validate_collection(out, std::max(1u, opts.workers));
    return out;
}

inline ClassCollection enumerate_classes(const TupleUniverse&&,
                                         const EnumerateOptions& = {}) = delete;

inline ClassCollection enumerate_classes(const TupleUniverse& u,
                                         const EnumerateOptions& opts = {}) {
    return opts.algorithm == EnumAlgorithm::levelwise ? enumerate_levelwise(u, opts)
                                                      : enumerate_incremental(u, opts);
}

/// One maximal type-A segment of a finite A-infinity Kupisch series.
struct Block {
    int offset = 0;
    KupischSeries series; // type_a
};

/// Cut a finite A-infinity series at every position with l <= 1. No module
/// can span such a position (its Loewy length would exceed the bound at its
/// last coordinate), so the segments are independent and each is a valid
/// type-A series starting with its l = 1 position.
inline std::vector<Block> decompose_blocks(const KupischSeries& s) {
    if (s.kind() != SeriesKind::finite_ainf)
        throw UsageError("block decomposition expects a finite A-infinity kupisch series");
    std::vector<Block> out;
    std::vector<int> cur;
    int cur_off = 0;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(Block{cur_off, KupischSeries::type_a(cur)});
            cur.clear();
        }
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int pos = s.offset() + static_cast<int>(i);
        const int v = s.values()[i];
        if (v == 0) {
            flush();
        } else if (v == 1) {
            flush();
            cur_off = pos;
            cur.push_back(1);
        } else {
            cur.push_back(v);
        }
    }
    flush();
    return out;
}

/// Enumeration of a finite A-infinity context: one collection per block. A
/// global class is a choice of one class per block; the total count is the
/// product of the block counts, and global classes are streamed rather than
/// materialised.
struct AinfEnumeration {
    Context context;
    std::vector<Block> blocks;
    std::vector<std::unique_ptr<TupleUniverse>> universes;
    std::vector<ClassCollection> collections;
    unsigned long long total = 1;
};

inline AinfEnumeration enumerate_ainf(const Context& ctx, const EnumerateOptions& opts = {}) {
    if (ctx.kind() != AlgebraKind::nakayama_ainf)
        throw UsageError("enumerate_ainf expects a finite A-infinity context");
    AinfEnumeration out{ctx, decompose_blocks(ctx.series()), {}, {}, 1};
    for (const auto& block : out.blocks) {
        auto u = std::make_unique<TupleUniverse>(
            TupleUniverse::build(Context::nakayama_a(block.series, ctx.d()), opts.max_universe));
        out.collections.push_back(enumerate_classes(*u, opts));
        out.universes.push_back(std::move(u));
        const unsigned long long c = out.collections.back().size();
        if (c != 0 && out.total > ~0ull / c)
            throw ResourceError("total class count overflows 64 bits; enumerate blocks separately");
        out.total *= c;
    }
    return out;
}

/// Odometer over one-class-per-block choices. `next` fills the per-block
/// class indices; `materialize` maps a choice to its member tuples in global
/// coordinates.
class GlobalClassCursor {
public:
    explicit GlobalClassCursor(const AinfEnumeration& e)
        : e_(&e), idx_(e.blocks.size(), 0) {}

    bool next(std::vector<std::size_t>& out) {
        if (done_) return false;
        out = idx_;
        // advance
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (++idx_[k] < e_->collections[k].size()) return true;
            idx_[k] = 0;
        }
        done_ = true;
        return true;
    }

    std::vector<OsTuple> materialize(std::span<const std::size_t> choice) const {
        std::vector<OsTuple> out;
        for (std::size_t k = 0; k < choice.size(); ++k) {
            const auto& coll = e_->collections[k];
            const auto& u = *e_->universes[k];
            const int off = e_->blocks[k].offset;
            coll.at(choice[k]).for_each([&](std::size_t i) {
                OsTuple t = u.tuple(i);
                for (auto& c : t) c += off;
                out.push_back(std::move(t));
            });
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const AinfEnumeration* e_;
    std::vector<std::size_t> idx_;
    bool done_ = false;
};

/// Position of each target tuple inside the source universe; UsageError if
/// the target is not a sub-universe of the source.
inline std::vector<std::size_t> sub_universe_map(const TupleUniverse& src,
                                                 const TupleUniverse& target) {
    if (target.width() != src.width())
        throw UsageError("restriction target has mismatched degree d");
    std::vector<std::size_t> to_src(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        auto idx = src.find(target.tuple(i));
        if (!idx)
            throw UsageError("restriction target tuple " + tuple_to_string(target.tuple(i)) +
                             " is not in the source universe");
        to_src[i] = *idx;
    }
    return to_src;
}

inline Bitset restrict_bits(const Bitset& cls, const std::vector<std::size_t>& to_src,
                            std::size_t target_size) {
    Bitset img(target_size);
    for (std::size_t i = 0; i < target_size; ++i)
        if (cls.test(to_src[i])) img.set(i);
    return img;
}

/// Image of a collection under intersection with a sub-universe (the
/// restriction map of posets). Images are deduplicated; each one is checked
/// to be a torsion class of the target.
inline ClassCollection restrict_to(const ClassCollection&, const TupleUniverse&&) = delete;

inline ClassCollection restrict_to(const ClassCollection& src, const TupleUniverse& target) {
    const auto to_src = sub_universe_map(src.universe(), target);
    std::vector<Bitset> images;
    images.reserve(src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
        images.push_back(restrict_bits(src.at(c), to_src, target.size()));
    ClassCollection out(target, std::move(images));
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!is_torsion_class(out.module_set(i)))
            throw DataError("restriction produced a set that is not a torsion class");
    return out;
}

} // namespace htors
