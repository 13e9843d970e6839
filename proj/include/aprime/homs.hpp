#pragma once

#include <vector>

#include "aprime/ideals.hpp"
#include "aprime/ring.hpp"

namespace aprime {

struct QuotientDescriptor;

/// A map between finite rings that preserves addition and multiplication.
/// Only validate_hom (and the constructors built on it) produce one.
struct RingHom {
    RingPtr domain;
    RingPtr codomain;
    std::vector<Index> map;
    bool surjective = false;

    Index operator()(Index a) const { return map[a]; }
};

/// Throws BadTableShape for a map of the wrong length or range, NotAdditive
/// or NotMultiplicative with the failing pair.
RingHom validate_hom(std::vector<Index> map, RingPtr domain, RingPtr codomain);

RingHom identity_hom(const RingPtr& ring);

/// Always a two-sided ideal of the domain.
IdealHandle kernel(const RingHom& f);
ElementSubset image(const RingHom& f);

/// f(P). Throws NotSurjective unless f is an epimorphism, since only then is
/// the image of an ideal again an ideal.
ElementSubset image_of_ideal(const RingHom& f, const IdealHandle& p);

/// f^{-1}(Q), an ideal of the same kind as Q that contains ker f.
IdealHandle preimage_of_ideal(const RingHom& f, const IdealHandle& q);

/// The canonical epimorphism R -> R/I.
RingHom projection_hom(const QuotientDescriptor& q);

/// All epimorphisms R -> S in lexicographic order of their maps. Throws
/// OrderTooLarge when |R| > 8.
std::vector<RingHom> enumerate_epimorphisms(const RingPtr& r, const RingPtr& s);

inline constexpr std::size_t kMaxEpiScanOrder = 8;

} // namespace aprime
