#pragma once

/**
 * @file predicates.hpp
 * @brief Prime, weakly prime, almost prime, idempotent and minimal ideals.
 *
 * The three primeness notions share one shape: P is tested against every
 * pair (A, B) of a quantifier universe (ideals of one kind, the improper R
 * included as a factor) and fails on the first pair with AB ⊆ P, A ⊄ P,
 * B ⊄ P that also passes the notion's guard:
 *
 *   prime         no guard
 *   weakly prime  AB ≠ 0
 *   almost prime  AB ⊄ P²
 *
 * Pairs are visited in universe order, so the reported witness is stable.
 * All predicates are defined for proper ideals only; passing R throws
 * ImproperIdeal.
 */

#include <optional>
#include <utility>
#include <vector>

#include "aprime/ideals.hpp"

namespace aprime {

struct PairWitness {
    IdealHandle a;
    IdealHandle b;
    std::size_t a_index = 0; ///< position in the universe
    std::size_t b_index = 0;
};

struct PredicateResult {
    bool holds = true;
    std::optional<PairWitness> witness;

    explicit operator bool() const noexcept { return holds; }
};

bool is_idempotent(const IdealHandle& p);

PredicateResult is_prime(const IdealHandle& p, const IdealUniverse& universe);
PredicateResult is_weakly_prime(const IdealHandle& p, const IdealUniverse& universe);
PredicateResult is_almost_prime(const IdealHandle& p, const IdealUniverse& universe);

/// Nonzero proper P with no ideal of the universe strictly between 0 and P.
/// Throws ZeroIdeal / ImproperIdeal.
bool is_minimal(const IdealHandle& p, const IdealUniverse& universe);

struct ElementPair {
    Index a = 0;
    Index b = 0;
};

/// Element-level versions of the three notions, tested with aRb in place
/// of AB. Only meaningful in rings with identity.
struct ElementCriteria {
    bool prime = true;
    bool weakly_prime = true;
    bool almost_prime = true;
    std::optional<ElementPair> prime_witness;
    std::optional<ElementPair> weakly_witness;
    std::optional<ElementPair> almost_witness;
};

/// Throws NoIdentity or ImproperIdeal. Right ideals are accepted; the flags
/// match the ideal-level predicates only for two-sided P.
ElementCriteria element_criteria(const FiniteRing& ring, const IdealHandle& p);

struct FullyAlmostPrimeResult {
    bool holds = true;
    std::optional<IdealHandle> first_failure;
};

FullyAlmostPrimeResult is_fully_almost_prime(const FiniteRing& ring);
FullyAlmostPrimeResult is_fully_almost_prime(const IdealUniverse& right_ideals);

struct ClassificationRecord {
    IdealHandle ideal;
    bool is_idempotent = false;
    bool is_prime = false;
    bool is_weakly_prime = false;
    bool is_almost_prime = false;
    bool is_minimal = false;

    std::optional<Index> idempotent_witness; ///< element of P outside P²
    std::optional<PairWitness> prime_witness;
    std::optional<PairWitness> weakly_witness;
    std::optional<PairWitness> almost_witness;
    std::optional<IdealHandle> minimal_witness; ///< a nonzero ideal strictly inside P
};

/// One record per proper right ideal, in enumeration order.
std::vector<ClassificationRecord> classify_ring(const FiniteRing& ring);
std::vector<ClassificationRecord> classify_ring(const IdealUniverse& right_ideals);
ClassificationRecord classify_ideal(const IdealHandle& p, const IdealUniverse& universe);

} // namespace aprime
