#ifndef PRIMEGRAPH_BITSET_HPP
#define PRIMEGRAPH_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace primegraph {

// Fixed-width dynamic bitset over vertex indices. Bits past size() are kept zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(int size) {
        Bitset b(size);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit at index >= from, or -1.
    int next(int from) const {
        if (from >= size_) return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }
    int first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    // Complement within [0, size).
    Bitset& flip() {
        for (auto& w : words_) w = ~w;
        trim();
        return *this;
    }
    // Clear all bits with index <= i.
    Bitset& clear_through(int i) {
        for (int wi = 0; wi < static_cast<int>(words_.size()) && wi * 64 <= i; ++wi) {
            int hi = i - wi * 64;
            if (hi >= 63)
                words_[wi] = 0;
            else
                words_[wi] &= ~std::uint64_t{0} << (hi + 1);
        }
        return *this;
    }
    // Clear all bits with index >= i.
    Bitset& clear_from(int i) {
        if (i < 0) i = 0;
        for (std::size_t wi = static_cast<std::size_t>(i) >> 6; wi < words_.size(); ++wi) {
            int lo = i - static_cast<int>(wi) * 64;
            if (lo <= 0)
                words_[wi] = 0;
            else
                words_[wi] &= (std::uint64_t{1} << lo) - 1;
        }
        return *this;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset& a, const Bitset& b) = default;

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(size_) * 0x9E3779B97F4A7C15ull;
        for (auto w : words_) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace primegraph

#endif  // PRIMEGRAPH_BITSET_HPP
