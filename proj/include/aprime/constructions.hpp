#pragma once

/**
 * @file constructions.hpp
 * @brief Ring constructors for the corpus.
 *
 * Matrix encoding: a k×k matrix over Z_m is the base-m number whose digits
 * are its entries read row-major, first entry most significant. For 2×2
 * matrices over Z_2 that makes e11 = 8, e12 = 4, e21 = 2, e22 = 1. The upper
 * triangular ring uses the same scheme over the k(k+1)/2 entries on or above
 * the diagonal, so for k = 2 the digits are (a11, a12, a22).
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aprime/homs.hpp"
#include "aprime/ideals.hpp"
#include "aprime/ring.hpp"

namespace aprime {

RingPtr zmod(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

RingPtr matrix_ring(std::size_t base, std::size_t k, std::size_t max_order = kDefaultMaxOrder);
RingPtr upper_triangular(std::size_t base, std::size_t k, std::size_t max_order = kDefaultMaxOrder);

/// Index of a k×k matrix over Z_base (row-major entries, any integers).
Index encode_matrix(std::size_t base, std::size_t k, const std::vector<std::int64_t>& entries);
/// Index of an upper-triangular matrix given its entries on/above the
/// diagonal, row-major.
Index encode_triangular(std::size_t base, std::size_t k, const std::vector<std::int64_t>& entries);

struct SubringResult {
    RingPtr ring;
    std::vector<Index> embedding; ///< subring index -> parent index
};

/// Re-indexes S (in increasing parent order) as a ring of its own. Throws
/// NotClosed with the failing pair and operation.
SubringResult subring(const FiniteRing& parent, const ElementSubset& s, std::string name);

struct ProductRing {
    RingPtr ring;
    RingPtr left;
    RingPtr right;
    RingHom project_left;
    RingHom project_right;

    /// Index of (r, s); the encoding is r*|S| + s.
    Index pair(Index r, Index s) const { return static_cast<Index>(r * right->order() + s); }
    /// I×J for ideals of the factors, an ideal of the product of the weaker
    /// of the two kinds.
    IdealHandle ideal_embed(const IdealHandle& i, const IdealHandle& j) const;
};

ProductRing direct_product(const RingPtr& r, const RingPtr& s, std::size_t max_order = kDefaultMaxOrder);

struct QuotientDescriptor {
    RingPtr parent;
    IdealHandle modulus;
    RingPtr ring;
    std::vector<Index> coset_reps; ///< smallest parent index in each coset
    RingHom projection;

    /// (P + I)/I for an ideal P of the parent.
    IdealHandle image_of_ideal(const IdealHandle& p) const;
};

/// R/I by cosets a+I. Throws NotTwoSided if I is not a two-sided ideal.
QuotientDescriptor quotient(const RingPtr& r, const IdealHandle& i);

/// "ex-2-1-ii", "ex-2-1-iii", "ex-2-1-iv-zp" (p = 3) or "ex-2-1-iv-zp(p)".
/// Throws UnknownName.
RingPtr builtin_example(std::string_view name, std::size_t max_order = kDefaultMaxOrder);

/// Elementwise isomorphism R -> S by backtracking over bijections that match
/// additive orders. Throws OrderTooLarge above order 8.
std::optional<std::vector<Index>> find_isomorphism(const FiniteRing& r, const FiniteRing& s);

} // namespace aprime
