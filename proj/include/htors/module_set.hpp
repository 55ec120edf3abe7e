#pragma once

#include <vector>

#include "htors/bitset.hpp"
#include "htors/universe.hpp"

namespace htors {

/// A subset of a tuple universe, identifying the subcategory add{ M_y : y in
/// the set } by its indecomposables. Equality and ordering are by member set;
/// the universe is shared, immutable context.
class ModuleSet {
public:
    explicit ModuleSet(const TupleUniverse& u) : u_(&u), bits_(u.size()) {}
    explicit ModuleSet(const TupleUniverse&&) = delete; // universe must outlive the set

    ModuleSet(const TupleUniverse& u, Bitset bits) : u_(&u), bits_(std::move(bits)) {
        if (bits_.size() != u.size())
            throw UsageError("module set bitset does not match universe size");
    }
    ModuleSet(const TupleUniverse&&, Bitset) = delete;

    static ModuleSet full(const TupleUniverse& u) {
        return ModuleSet(u, Bitset::all_set(u.size()));
    }
    static ModuleSet full(const TupleUniverse&&) = delete;

    static ModuleSet of_tuples(const TupleUniverse& u, const std::vector<OsTuple>& ts) {
        ModuleSet s(u);
        for (const auto& t : ts) s.bits_.set(u.index_of(t));
        return s;
    }
    static ModuleSet of_tuples(const TupleUniverse&&, const std::vector<OsTuple>&) = delete;

    const TupleUniverse& universe() const { return *u_; }
    const Bitset& bits() const { return bits_; }
    Bitset& bits() { return bits_; }

    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(std::size_t i) const { return bits_.test(i); }
    void insert(std::size_t i) { bits_.set(i); }

    bool is_subset_of(const ModuleSet& o) const { return bits_.is_subset_of(o.bits_); }

    std::vector<OsTuple> to_tuples() const {
        std::vector<OsTuple> out;
        out.reserve(size());
        bits_.for_each([&](std::size_t i) { out.push_back(u_->tuple(i)); });
        return out;
    }

    friend bool operator==(const ModuleSet& a, const ModuleSet& b) {
        return a.bits_ == b.bits_;
    }

    friend ModuleSet operator&(const ModuleSet& a, const ModuleSet& b) {
        return ModuleSet(*a.u_, a.bits_ & b.bits_);
    }

    friend ModuleSet operator|(const ModuleSet& a, const ModuleSet& b) {
        return ModuleSet(*a.u_, a.bits_ | b.bits_);
    }

private:
    const TupleUniverse* u_;
    Bitset bits_;
};

} // namespace htors
