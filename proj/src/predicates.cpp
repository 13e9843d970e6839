#include "aprime/predicates.hpp"

#include "aprime/error.hpp"

namespace aprime {

namespace {

enum class Guard { None, NonzeroProduct, OutsideSquare };

void require_proper(const IdealHandle& p, const char* who) {
    if (!p.proper || p.subset.is_whole())
        throw Error(ErrorCode::ImproperIdeal, std::string(who) + ": the whole ring is not a proper ideal");
}

void require_universe_ring(const IdealHandle& p, const IdealUniverse& u, const char* who) {
    if (&p.ring() != &u.ring())
        throw Error(ErrorCode::RingMismatch, std::string(who) + ": ideal and universe belong to different rings");
}

PredicateResult check_pairs(const IdealHandle& p, const IdealUniverse& universe, Guard guard, const char* who) {
    require_proper(p, who);
    require_universe_ring(p, universe, who);
    const FiniteRing& ring = p.ring();
    const Bitset& pb = p.bits();
    Bitset square;
    if (guard == Guard::OutsideSquare) square = product_bits(ring, pb, pb);

    const std::size_t u = universe.size();
    for (std::size_t i = 0; i < u; ++i) {
        if (universe[i].bits().is_subset_of(pb)) continue;
        for (std::size_t j = 0; j < u; ++j) {
            if (universe[j].bits().is_subset_of(pb)) continue;
            const Bitset& ab = universe.product(i, j);
            if (!ab.is_subset_of(pb)) continue;
            if (guard == Guard::NonzeroProduct && ab.count() == 1) continue;
            if (guard == Guard::OutsideSquare && ab.is_subset_of(square)) continue;
            return PredicateResult{false, PairWitness{universe[i], universe[j], i, j}};
        }
    }
    return PredicateResult{};
}

} // namespace

bool is_idempotent(const IdealHandle& p) {
    return product_bits(p.ring(), p.bits(), p.bits()) == p.bits();
}

PredicateResult is_prime(const IdealHandle& p, const IdealUniverse& universe) {
    return check_pairs(p, universe, Guard::None, "is_prime");
}

PredicateResult is_weakly_prime(const IdealHandle& p, const IdealUniverse& universe) {
    return check_pairs(p, universe, Guard::NonzeroProduct, "is_weakly_prime");
}

PredicateResult is_almost_prime(const IdealHandle& p, const IdealUniverse& universe) {
    return check_pairs(p, universe, Guard::OutsideSquare, "is_almost_prime");
}

namespace {

std::optional<IdealHandle> strictly_inside(const IdealHandle& p, const IdealUniverse& universe) {
    for (const auto& i : universe.ideals()) {
        const auto& ib = i.bits();
        if (ib.count() > 1 && ib != p.bits() && ib.is_subset_of(p.bits())) return i;
    }
    return std::nullopt;
}

} // namespace

bool is_minimal(const IdealHandle& p, const IdealUniverse& universe) {
    require_proper(p, "is_minimal");
    require_universe_ring(p, universe, "is_minimal");
    if (p.is_zero()) throw Error(ErrorCode::ZeroIdeal, "is_minimal: minimality is defined for nonzero ideals");
    return !strictly_inside(p, universe);
}

ElementCriteria element_criteria(const FiniteRing& ring, const IdealHandle& p) {
    if (!ring.has_identity()) throw Error(ErrorCode::NoIdentity, "element_criteria requires a ring with identity");
    require_proper(p, "element_criteria");
    if (&p.ring() != &ring) throw Error(ErrorCode::RingMismatch, "element_criteria: ideal belongs to another ring");

    const Bitset square = product_bits(ring, p.bits(), p.bits());
    const auto n = static_cast<Index>(ring.order());
    ElementCriteria out;
    for (Index a = 0; a < n; ++a) {
        if (p.contains(a)) continue;
        for (Index b = 0; b < n; ++b) {
            if (p.contains(b)) continue;
            const ElementSubset s = aRb_set(ring, a, b);
            if (!s.bits().is_subset_of(p.bits())) continue;
            if (out.prime) {
                out.prime = false;
                out.prime_witness = ElementPair{a, b};
            }
            if (out.weakly_prime && !s.is_zero()) {
                out.weakly_prime = false;
                out.weakly_witness = ElementPair{a, b};
            }
            if (out.almost_prime && !s.bits().is_subset_of(square)) {
                out.almost_prime = false;
                out.almost_witness = ElementPair{a, b};
            }
        }
    }
    return out;
}

FullyAlmostPrimeResult is_fully_almost_prime(const IdealUniverse& right_ideals) {
    for (const auto& p : right_ideals.ideals()) {
        if (!p.proper) continue;
        if (!is_almost_prime(p, right_ideals)) return FullyAlmostPrimeResult{false, p};
    }
    return FullyAlmostPrimeResult{};
}

FullyAlmostPrimeResult is_fully_almost_prime(const FiniteRing& ring) {
    return is_fully_almost_prime(IdealUniverse(ring, IdealKind::Right));
}

ClassificationRecord classify_ideal(const IdealHandle& p, const IdealUniverse& universe) {
    require_proper(p, "classify_ideal");
    require_universe_ring(p, universe, "classify_ideal");
    ClassificationRecord rec{p};

    const Bitset square = product_bits(p.ring(), p.bits(), p.bits());
    rec.is_idempotent = square == p.bits();
    if (!rec.is_idempotent) {
        const Bitset outside = p.bits() - square;
        rec.idempotent_witness = static_cast<Index>(outside.members().front());
    }

    const auto prime = is_prime(p, universe);
    const auto weakly = is_weakly_prime(p, universe);
    const auto almost = is_almost_prime(p, universe);
    rec.is_prime = prime.holds;
    rec.prime_witness = prime.witness;
    rec.is_weakly_prime = weakly.holds;
    rec.weakly_witness = weakly.witness;
    rec.is_almost_prime = almost.holds;
    rec.almost_witness = almost.witness;

    if (!p.is_zero()) {
        rec.minimal_witness = strictly_inside(p, universe);
        rec.is_minimal = !rec.minimal_witness;
    }
    return rec;
}

std::vector<ClassificationRecord> classify_ring(const IdealUniverse& right_ideals) {
    std::vector<ClassificationRecord> out;
    for (const auto& p : right_ideals.ideals())
        if (p.proper) out.push_back(classify_ideal(p, right_ideals));
    return out;
}

std::vector<ClassificationRecord> classify_ring(const FiniteRing& ring) {
    return classify_ring(IdealUniverse(ring, IdealKind::Right));
}

} // namespace aprime
