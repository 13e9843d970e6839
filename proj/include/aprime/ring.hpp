#pragma once

/**
 * @file ring.hpp
 * @brief Finite rings presented by Cayley tables.
 *
 * Elements are positional indices 0..n-1. Nothing is assumed about which
 * index is the zero: validation discovers it, along with additive inverses
 * and a two-sided identity when one exists. A FiniteRing can only be obtained
 * through validate_ring, so every instance satisfies the ring axioms, and it
 * is immutable afterwards.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace aprime {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 64;

/// Unvalidated input: entries are wide signed integers so that out-of-range
/// or negative values can be reported instead of silently wrapping.
struct RawRing {
    std::string name;
    std::size_t order = 0;
    std::vector<std::vector<std::int64_t>> add;
    std::vector<std::vector<std::int64_t>> mul;
    std::optional<std::vector<std::string>> labels;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
public:
    std::size_t order() const noexcept { return n_; }
    const std::string& name() const noexcept { return name_; }

    Index add(Index a, Index b) const noexcept { return add_[a * n_ + b]; }
    Index mul(Index a, Index b) const noexcept { return mul_[a * n_ + b]; }
    Index neg(Index a) const noexcept { return neg_[a]; }
    Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

    Index zero() const noexcept { return zero_; }
    const std::optional<Index>& identity() const noexcept { return identity_; }
    bool has_identity() const noexcept { return identity_.has_value(); }
    bool commutative() const noexcept { return commutative_; }

    const std::string& label(Index a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Row-major n*n tables.
    const std::vector<Index>& add_table() const noexcept { return add_; }
    const std::vector<Index>& mul_table() const noexcept { return mul_; }

    /// n·a for a non-negative integer n.
    Index multiple(std::size_t n, Index a) const noexcept;

    /// Additive order of a.
    std::size_t additive_order(Index a) const noexcept;

    /// Tables equal (names and labels ignored).
    bool same_tables(const FiniteRing& other) const noexcept {
        return n_ == other.n_ && add_ == other.add_ && mul_ == other.mul_;
    }

    /// Same contents but a different display name.
    RingPtr renamed(std::string name) const;

private:
    friend RingPtr validate_ring(const RawRing&, std::size_t);
    FiniteRing() = default;

    std::size_t n_ = 0;
    std::string name_;
    std::vector<Index> add_;
    std::vector<Index> mul_;
    std::vector<Index> neg_;
    Index zero_ = 0;
    std::optional<Index> identity_;
    bool commutative_ = false;
    std::vector<std::string> labels_;
};

/// Checks every ring axiom exhaustively (O(n^3)) and returns an immutable
/// ring. Throws Error with BadTableShape, OrderTooLarge, NotAbelianGroup,
/// NotAssociative or NotDistributive; the message names the failing
/// elements.
RingPtr validate_ring(const RawRing& raw, std::size_t max_order = kDefaultMaxOrder);

/// Convenience for constructions: tables already in index form.
RingPtr make_ring(std::string name, std::size_t order, const std::vector<Index>& add,
                  const std::vector<Index>& mul, std::optional<std::vector<std::string>> labels = std::nullopt,
                  std::size_t max_order = kDefaultMaxOrder);

struct RingProperties {
    bool commutative = false;
    bool has_identity = false;
    std::optional<Index> identity_index;
};

RingProperties ring_properties(const FiniteRing& ring);

/// Back to the raw form (for serialization).
RawRing to_raw(const FiniteRing& ring);

} // namespace aprime
