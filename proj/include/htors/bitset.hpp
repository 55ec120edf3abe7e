#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace htors {

/// Dynamic bitset sized once and then reused. Bits beyond size() in the last
/// word are kept zero, so equality and hashing can work on raw words.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset all_set(std::size_t nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    /// this \ o
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    /// Visit set bits in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int b = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Visit bits of a & b in ascending order without a temporary.
template <class F>
inline void for_each_in_intersection(const Bitset& a, const Bitset& b, F&& f) {
    auto wa = a.words(), wb = b.words();
    assert(wa.size() == wb.size());
    for (std::size_t k = 0; k < wa.size(); ++k) {
        std::uint64_t w = wa[k] & wb[k];
        while (w) {
            const int bit = std::countr_zero(w);
            f(k * 64 + static_cast<std::size_t>(bit));
            w &= w - 1;
        }
    }
}

/// Visit bits of a & b & ~c in ascending order.
template <class F>
inline void for_each_in_intersection_minus(const Bitset& a, const Bitset& b,
                                           const Bitset& c, F&& f) {
    auto wa = a.words(), wb = b.words(), wc = c.words();
    assert(wa.size() == wb.size() && wb.size() == wc.size());
    for (std::size_t k = 0; k < wa.size(); ++k) {
        std::uint64_t w = wa[k] & wb[k] & ~wc[k];
        while (w) {
            const int bit = std::countr_zero(w);
            f(k * 64 + static_cast<std::size_t>(bit));
            w &= w - 1;
        }
    }
}

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : b.words()) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Order used everywhere a list of sets must be canonical: first by
/// cardinality, then lexicographically on the ascending member list.
/// For equal cardinalities the lexicographically smaller list is the one
/// containing the lowest bit on which the two sets differ.
inline bool canonical_less(const Bitset& a, const Bitset& b) {
    const std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    auto wa = a.words(), wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k) {
        const std::uint64_t diff = wa[k] ^ wb[k];
        if (diff) {
            const std::uint64_t low = diff & (~diff + 1);
            return (wa[k] & low) != 0;
        }
    }
    return false;
}

} // namespace htors
