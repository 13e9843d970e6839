#pragma once

/**
 * @file ideals.hpp
 * @brief Subsets, ideals and ideal arithmetic of a finite ring.
 *
 * Subsets are bit-vectors over the element indices of one ring. An
 * ElementSubset only borrows its ring: the ring must outlive it (rings are
 * held by RingPtr everywhere above this layer).
 *
 * Products of subsets always mean the additive closure of the pairwise
 * products, i.e. the set of finite sums of products ab.
 */

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aprime/bitset.hpp"
#include "aprime/ring.hpp"

namespace aprime {

enum class IdealKind { Right, Left, TwoSided };
enum class ColonSide {
    Right, ///< I:J   = {x : Jx ⊆ I}
    Star,  ///< (I:J)* = {x : xJ ⊆ I}
};

std::string_view to_string(IdealKind kind) noexcept;

class ElementSubset {
public:
    explicit ElementSubset(const FiniteRing& ring) : ring_(&ring), bits_(ring.order()) {}
    ElementSubset(const FiniteRing& ring, Bitset bits);
    ElementSubset(const FiniteRing& ring, std::initializer_list<Index> elements);
    ElementSubset(const FiniteRing& ring, std::span<const Index> elements);

    static ElementSubset whole(const FiniteRing& ring);
    static ElementSubset zero(const FiniteRing& ring) { return ElementSubset(ring, {ring.zero()}); }

    const FiniteRing& ring() const noexcept { return *ring_; }
    const Bitset& bits() const noexcept { return bits_; }

    bool contains(Index a) const noexcept { return bits_.test(a); }
    void insert(Index a) noexcept { bits_.set(a); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool is_whole() const noexcept { return bits_.all(); }
    bool is_zero() const noexcept { return size() == 1 && contains(ring_->zero()); }
    std::vector<Index> members() const;

    /// Throws RingMismatch if the owning rings differ.
    bool is_subset_of(const ElementSubset& other) const;

    /// Same ring object and same members.
    friend bool operator==(const ElementSubset& a, const ElementSubset& b) noexcept {
        return a.ring_ == b.ring_ && a.bits_ == b.bits_;
    }

    /// "{0,a,b}" using the ring's labels, in index order.
    std::string to_string() const;

private:
    const FiniteRing* ring_;
    Bitset bits_;
};

ElementSubset set_union(const ElementSubset& a, const ElementSubset& b);

struct IdealHandle {
    ElementSubset subset;
    IdealKind kind = IdealKind::Right;
    bool proper = true;

    const FiniteRing& ring() const noexcept { return subset.ring(); }
    const Bitset& bits() const noexcept { return subset.bits(); }
    bool is_zero() const noexcept { return subset.is_zero(); }
    bool contains(Index a) const noexcept { return subset.contains(a); }
};

/// Wraps a subset after checking it is an ideal of the given kind; throws
/// NotAnIdeal with the violating witness otherwise.
IdealHandle as_ideal(ElementSubset subset, IdealKind kind);

// Bit-level primitives, shared by the higher layers' inner loops.
Bitset additive_closure(const FiniteRing& ring, const Bitset& generators);
/// Smallest additive subgroup containing the subgroup `group` and `extra`.
Bitset extend_subgroup(const FiniteRing& ring, const Bitset& group, const Bitset& extra);
Bitset product_bits(const FiniteRing& ring, const Bitset& a, const Bitset& b);

ElementSubset additive_closure(const ElementSubset& s);

IdealHandle principal(const FiniteRing& ring, Index a, IdealKind kind);

struct IdealViolation {
    enum class Rule { MissingZero, NotAdditivelyClosed, NotNegationClosed, NotRightAbsorbing, NotLeftAbsorbing };
    Rule rule;
    Index x = 0;      ///< element of the subset
    Index y = 0;      ///< second element (subset member for sums, ring element for absorption)
    Index result = 0; ///< the offending value outside the subset

    std::string describe(const FiniteRing& ring) const;
};

/// std::nullopt when s is an ideal of the given kind.
std::optional<IdealViolation> ideal_violation(const ElementSubset& s, IdealKind kind);
inline bool is_ideal(const ElementSubset& s, IdealKind kind) { return !ideal_violation(s, kind); }

/// Every ideal of the given kind, including {0} and the improper R, ordered
/// by (size, bits as integer). Built as the sum-closure of principal ideals.
std::vector<IdealHandle> enumerate_ideals(const FiniteRing& ring, IdealKind kind);

/// Exhaustive scan of all 2^n subsets; throws OrderTooLarge above order 16.
std::vector<IdealHandle> enumerate_ideals_oracle(const FiniteRing& ring, IdealKind kind);

ElementSubset ideal_product(const ElementSubset& a, const ElementSubset& b);
inline ElementSubset ideal_product(const IdealHandle& a, const IdealHandle& b) {
    return ideal_product(a.subset, b.subset);
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);

ElementSubset colon(const ElementSubset& i, const ElementSubset& j, ColonSide side);

/// The raw set {a r b : r in R}; no additive closure.
ElementSubset aRb_set(const FiniteRing& ring, Index a, Index b);

/// The ideals of one kind together with all their pairwise products,
/// which is what every "for all ideals A, B" quantifier consumes.
class IdealUniverse {
public:
    IdealUniverse(const FiniteRing& ring, IdealKind kind);
    IdealUniverse(const FiniteRing& ring, IdealKind kind, std::vector<IdealHandle> ideals);

    const FiniteRing& ring() const noexcept { return *ring_; }
    IdealKind kind() const noexcept { return kind_; }
    const std::vector<IdealHandle>& ideals() const noexcept { return ideals_; }
    std::size_t size() const noexcept { return ideals_.size(); }
    const IdealHandle& operator[](std::size_t i) const { return ideals_[i]; }

    /// Bits of ideals()[i] * ideals()[j].
    const Bitset& product(std::size_t i, std::size_t j) const { return products_[i * ideals_.size() + j]; }

    std::optional<std::size_t> find(const Bitset& bits) const;

private:
    void compute_products();

    const FiniteRing* ring_;
    IdealKind kind_;
    std::vector<IdealHandle> ideals_;
    std::vector<Bitset> products_;
};

} // namespace aprime
