#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace aprime {

/// Fixed-length bit-vector over element indices. All set algebra is
/// word-parallel; both operands of a binary operation must have equal length.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() noexcept;

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }
    bool all() const noexcept { return count() == n_; }

    bool is_subset_of(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Order by popcount, then by the bits read as an unsigned integer
    /// (bit i has weight 2^i).
    friend std::strong_ordering canonical_order(const Bitset& a, const Bitset& b) noexcept;

    /// Calls f(i) for each set bit in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(word));
                f(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    std::vector<std::size_t> members() const;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::size_t hash() const noexcept;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

struct CanonicalLess {
    bool operator()(const Bitset& a, const Bitset& b) const noexcept { return canonical_order(a, b) < 0; }
};

} // namespace aprime
