#include "aprime/homs.hpp"

#include <algorithm>
#include <sstream>

#include "aprime/constructions.hpp"
#include "aprime/error.hpp"

namespace aprime {

RingHom validate_hom(std::vector<Index> map, RingPtr domain, RingPtr codomain) {
    const FiniteRing& R = *domain;
    const FiniteRing& S = *codomain;
    const auto n = static_cast<Index>(R.order());
    if (map.size() != R.order()) throw Error(ErrorCode::BadTableShape, "hom map length differs from domain order");
    for (auto v : map)
        if (v >= S.order()) throw Error(ErrorCode::BadTableShape, "hom map value outside the codomain");

    const auto witness = [&](Index a, Index b) {
        std::ostringstream os;
        os << "at pair (" << R.label(a) << ", " << R.label(b) << ")";
        return os.str();
    };
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (map[R.add(a, b)] != S.add(map[a], map[b])) throw Error(ErrorCode::NotAdditive, witness(a, b));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (map[R.mul(a, b)] != S.mul(map[a], map[b])) throw Error(ErrorCode::NotMultiplicative, witness(a, b));

    Bitset hit(S.order());
    for (auto v : map) hit.set(v);
    const bool surjective = hit.all();
    return RingHom{std::move(domain), std::move(codomain), std::move(map), surjective};
}

RingHom identity_hom(const RingPtr& ring) {
    std::vector<Index> map(ring->order());
    for (Index a = 0; a < map.size(); ++a) map[a] = a;
    return RingHom{ring, ring, std::move(map), true};
}

IdealHandle kernel(const RingHom& f) {
    ElementSubset k(*f.domain);
    const Index z = f.codomain->zero();
    for (Index a = 0; a < f.map.size(); ++a)
        if (f.map[a] == z) k.insert(a);
    const bool proper = !k.is_whole();
    return IdealHandle{std::move(k), IdealKind::TwoSided, proper};
}

ElementSubset image(const RingHom& f) {
    ElementSubset out(*f.codomain);
    for (auto v : f.map) out.insert(v);
    return out;
}

ElementSubset image_of_ideal(const RingHom& f, const IdealHandle& p) {
    if (!f.surjective) throw Error(ErrorCode::NotSurjective, "image_of_ideal needs an epimorphism");
    if (&p.ring() != f.domain.get()) throw Error(ErrorCode::RingMismatch, "image_of_ideal: ideal is not in the domain");
    ElementSubset out(*f.codomain);
    p.bits().for_each([&](std::size_t a) { out.insert(f.map[a]); });
    return out;
}

IdealHandle preimage_of_ideal(const RingHom& f, const IdealHandle& q) {
    if (&q.ring() != f.codomain.get())
        throw Error(ErrorCode::RingMismatch, "preimage_of_ideal: ideal is not in the codomain");
    ElementSubset out(*f.domain);
    for (Index a = 0; a < f.map.size(); ++a)
        if (q.contains(f.map[a])) out.insert(a);
    const bool proper = !out.is_whole();
    return IdealHandle{std::move(out), q.kind, proper};
}

RingHom projection_hom(const QuotientDescriptor& q) { return q.projection; }

namespace {

/// Greedy additive generating set, smallest indices first.
std::vector<Index> additive_generators(const FiniteRing& ring) {
    std::vector<Index> gens;
    Bitset span(ring.order());
    span.set(ring.zero());
    for (Index a = 0; a < ring.order(); ++a) {
        if (span.test(a)) continue;
        gens.push_back(a);
        Bitset one(ring.order());
        one.set(a);
        span = extend_subgroup(ring, span, one);
    }
    return gens;
}

/// Extends generator images to an additive map by walking x -> x+g; returns
/// false if two paths disagree.
bool extend_additively(const FiniteRing& R, const FiniteRing& S, const std::vector<Index>& gens,
                       const std::vector<Index>& images, std::vector<Index>& map) {
    constexpr Index unset = ~Index{0};
    map.assign(R.order(), unset);
    map[R.zero()] = S.zero();
    std::vector<Index> queue{R.zero()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index x = queue[head];
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Index y = R.add(x, gens[g]);
            const Index fy = S.add(map[x], images[g]);
            if (map[y] == unset) {
                map[y] = fy;
                queue.push_back(y);
            } else if (map[y] != fy) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

std::vector<RingHom> enumerate_epimorphisms(const RingPtr& r, const RingPtr& s) {
    const FiniteRing& R = *r;
    const FiniteRing& S = *s;
    if (R.order() > kMaxEpiScanOrder) {
        std::ostringstream os;
        os << "epimorphism scan is limited to domains of order " << kMaxEpiScanOrder;
        throw Error(ErrorCode::OrderTooLarge, os.str());
    }
    std::vector<RingHom> out;
    if (S.order() > R.order() || R.order() % S.order() != 0) return out;

    const auto gens = additive_generators(R);
    std::vector<std::vector<Index>> candidates(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::size_t ord = R.additive_order(gens[g]);
        for (Index y = 0; y < S.order(); ++y)
            if (ord % S.additive_order(y) == 0) candidates[g].push_back(y);
    }

    std::vector<std::size_t> pos(gens.size(), 0);
    std::vector<Index> images(gens.size());
    std::vector<Index> map;
    const auto n = static_cast<Index>(R.order());
    while (true) {
        for (std::size_t g = 0; g < gens.size(); ++g) images[g] = candidates[g][pos[g]];

        if (extend_additively(R, S, gens, images, map)) {
            bool ok = true;
            for (Index a = 0; a < n && ok; ++a)
                for (Index b = 0; b < n && ok; ++b) ok = map[R.mul(a, b)] == S.mul(map[a], map[b]);
            Bitset hit(S.order());
            for (auto v : map) hit.set(v);
            if (ok && hit.all()) out.push_back(RingHom{r, s, map, true});
        }

        // Odometer over the candidate lists; zero is always a candidate.
        std::size_t g = gens.size();
        for (; g > 0; --g) {
            if (++pos[g - 1] < candidates[g - 1].size()) break;
            pos[g - 1] = 0;
        }
        if (g == 0) break;
    }
    std::sort(out.begin(), out.end(), [](const RingHom& a, const RingHom& b) { return a.map < b.map; });
    return out;
}

} // namespace aprime
