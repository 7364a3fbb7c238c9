#pragma once

#include <cstdint>
#include <vector>

namespace hhfree {

// Fixed-capacity dynamic bitset used for adjacency rows and vertex sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void flip(int i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Index of the first set bit, or -1.
    int first() const { return next(-1); }

    // Index of the first set bit strictly after `i`, or -1.
    int next(int i) const {
        int word = (i + 1) >> 6;
        if (word >= static_cast<int>(w_.size())) return -1;
        int shift = (i + 1) & 63;
        uint64_t cur = shift ? (w_[word] & (~uint64_t{0} << shift)) : w_[word];
        while (true) {
            if (cur) return (word << 6) + __builtin_ctzll(cur);
            if (++word >= static_cast<int>(w_.size())) return -1;
            cur = w_[word];
        }
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // Remove all bits present in `o`.
    Bits& andnot(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

    static Bits of(int nbits, const std::vector<int>& idx) {
        Bits b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

    // All bits [0, nbits) set.
    static Bits full(int nbits) {
        Bits b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }

    size_t hash() const {
        size_t h = static_cast<size_t>(nbits_) * 0x9e3779b97f4a7c15ULL;
        for (uint64_t x : w_) h = h * 0x100000001b3ULL ^ x;
        return h;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace hhfree
