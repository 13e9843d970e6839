#include "aprime/ideals.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "aprime/error.hpp"

namespace aprime {

std::string_view to_string(IdealKind kind) noexcept {
    switch (kind) {
    case IdealKind::Right: return "right";
    case IdealKind::Left: return "left";
    case IdealKind::TwoSided: return "two-sided";
    }
    return "?";
}

namespace {

void require_same_ring(const FiniteRing& a, const FiniteRing& b, const char* op) {
    if (&a != &b) throw Error(ErrorCode::RingMismatch, std::string(op) + ": operands belong to different rings");
}

} // namespace

ElementSubset::ElementSubset(const FiniteRing& ring, Bitset bits) : ring_(&ring), bits_(std::move(bits)) {
    if (bits_.size() != ring.order())
        throw Error(ErrorCode::BadTableShape, "subset length does not match ring order");
}

ElementSubset::ElementSubset(const FiniteRing& ring, std::initializer_list<Index> elements)
    : ElementSubset(ring, std::span<const Index>(elements.begin(), elements.size())) {}

ElementSubset::ElementSubset(const FiniteRing& ring, std::span<const Index> elements)
    : ring_(&ring), bits_(ring.order()) {
    for (auto e : elements) {
        if (e >= ring.order()) throw Error(ErrorCode::BadTableShape, "element index out of range");
        bits_.set(e);
    }
}

ElementSubset ElementSubset::whole(const FiniteRing& ring) {
    Bitset b(ring.order());
    b.set_all();
    return ElementSubset(ring, std::move(b));
}

std::vector<Index> ElementSubset::members() const {
    std::vector<Index> out;
    out.reserve(size());
    bits_.for_each([&](std::size_t i) { out.push_back(static_cast<Index>(i)); });
    return out;
}

bool ElementSubset::is_subset_of(const ElementSubset& other) const {
    require_same_ring(*ring_, *other.ring_, "is_subset_of");
    return bits_.is_subset_of(other.bits_);
}

std::string ElementSubset::to_string() const {
    std::string out = "{";
    bool first = true;
    bits_.for_each([&](std::size_t i) {
        if (!first) out += ',';
        out += ring_->label(static_cast<Index>(i));
        first = false;
    });
    return out + "}";
}

ElementSubset set_union(const ElementSubset& a, const ElementSubset& b) {
    require_same_ring(a.ring(), b.ring(), "union");
    return ElementSubset(a.ring(), a.bits() | b.bits());
}

IdealHandle as_ideal(ElementSubset subset, IdealKind kind) {
    if (auto v = ideal_violation(subset, kind))
        throw Error(ErrorCode::NotAnIdeal, subset.to_string() + " is not a " + std::string(to_string(kind)) +
                                               " ideal: " + v->describe(subset.ring()));
    const bool proper = !subset.is_whole();
    return IdealHandle{std::move(subset), kind, proper};
}

Bitset extend_subgroup(const FiniteRing& ring, const Bitset& group, const Bitset& extra) {
    Bitset h = group;
    std::vector<Index> members;
    members.reserve(ring.order());
    h.for_each([&](std::size_t i) { members.push_back(static_cast<Index>(i)); });

    // H + <g> is the disjoint union of the cosets H + kg for k below the
    // order of g modulo H.
    extra.for_each([&](std::size_t gi) {
        const auto g = static_cast<Index>(gi);
        if (h.test(g)) return;
        const std::size_t base = members.size();
        for (Index shift = g; !h.test(shift); shift = ring.add(shift, g)) {
            for (std::size_t k = 0; k < base; ++k) {
                const Index y = ring.add(members[k], shift);
                h.set(y);
                members.push_back(y);
            }
        }
    });
    return h;
}

Bitset additive_closure(const FiniteRing& ring, const Bitset& generators) {
    Bitset zero(ring.order());
    zero.set(ring.zero());
    return extend_subgroup(ring, zero, generators);
}

Bitset product_bits(const FiniteRing& ring, const Bitset& a, const Bitset& b) {
    Bitset raw(ring.order());
    const auto bm = b.members();
    a.for_each([&](std::size_t x) {
        for (auto y : bm) raw.set(ring.mul(static_cast<Index>(x), static_cast<Index>(y)));
    });
    return additive_closure(ring, raw);
}

ElementSubset additive_closure(const ElementSubset& s) {
    return ElementSubset(s.ring(), additive_closure(s.ring(), s.bits()));
}

IdealHandle principal(const FiniteRing& ring, Index a, IdealKind kind) {
    const auto n = static_cast<Index>(ring.order());
    Bitset gens(n);
    gens.set(a);
    for (Index r = 0; r < n; ++r) {
        if (kind != IdealKind::Left) gens.set(ring.mul(a, r));
        if (kind != IdealKind::Right) gens.set(ring.mul(r, a));
        if (kind == IdealKind::TwoSided)
            for (Index s = 0; s < n; ++s) gens.set(ring.mul(ring.mul(r, a), s));
    }
    ElementSubset sub(ring, additive_closure(ring, gens));
    const bool proper = !sub.is_whole();
    return IdealHandle{std::move(sub), kind, proper};
}

std::string IdealViolation::describe(const FiniteRing& ring) const {
    const auto L = [&](Index i) { return ring.label(i); };
    std::ostringstream os;
    switch (rule) {
    case Rule::MissingZero: os << "zero " << L(x) << " is missing"; break;
    case Rule::NotAdditivelyClosed: os << L(x) << "+" << L(y) << "=" << L(result) << " is missing"; break;
    case Rule::NotNegationClosed: os << "-" << L(x) << "=" << L(result) << " is missing"; break;
    case Rule::NotRightAbsorbing: os << L(x) << "*" << L(y) << "=" << L(result) << " is missing"; break;
    case Rule::NotLeftAbsorbing: os << L(y) << "*" << L(x) << "=" << L(result) << " is missing"; break;
    }
    return os.str();
}

std::optional<IdealViolation> ideal_violation(const ElementSubset& s, IdealKind kind) {
    using Rule = IdealViolation::Rule;
    const FiniteRing& ring = s.ring();
    const auto n = static_cast<Index>(ring.order());
    if (!s.contains(ring.zero())) return IdealViolation{Rule::MissingZero, ring.zero(), 0, ring.zero()};
    const auto members = s.members();
    for (auto x : members)
        for (auto y : members)
            if (const Index z = ring.add(x, y); !s.contains(z)) return IdealViolation{Rule::NotAdditivelyClosed, x, y, z};
    for (auto x : members)
        if (!s.contains(ring.neg(x))) return IdealViolation{Rule::NotNegationClosed, x, 0, ring.neg(x)};
    for (auto x : members)
        for (Index r = 0; r < n; ++r) {
            if (kind != IdealKind::Left)
                if (const Index z = ring.mul(x, r); !s.contains(z)) return IdealViolation{Rule::NotRightAbsorbing, x, r, z};
            if (kind != IdealKind::Right)
                if (const Index z = ring.mul(r, x); !s.contains(z)) return IdealViolation{Rule::NotLeftAbsorbing, x, r, z};
        }
    return std::nullopt;
}

namespace {

std::vector<IdealHandle> to_sorted_handles(const FiniteRing& ring, IdealKind kind, std::vector<Bitset> found) {
    std::sort(found.begin(), found.end(), CanonicalLess{});
    std::vector<IdealHandle> out;
    out.reserve(found.size());
    for (auto& b : found) {
        const bool proper = !b.all();
        out.push_back(IdealHandle{ElementSubset(ring, std::move(b)), kind, proper});
    }
    return out;
}

} // namespace

std::vector<IdealHandle> enumerate_ideals(const FiniteRing& ring, IdealKind kind) {
    const auto n = static_cast<Index>(ring.order());
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> found;
    std::vector<Bitset> principals;

    const auto admit = [&](Bitset b) {
        if (seen.insert(b).second) found.push_back(std::move(b));
    };
    admit(ElementSubset::zero(ring).bits());
    for (Index a = 0; a < n; ++a) {
        Bitset p = principal(ring, a, kind).bits();
        if (std::find(principals.begin(), principals.end(), p) == principals.end()) principals.push_back(p);
        admit(std::move(p));
    }

    // Every ideal is the sum of the principal ideals of its elements, so
    // closing under "add one principal ideal" reaches all of them.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& p : principals) {
            if (p.is_subset_of(found[i])) continue;
            admit(extend_subgroup(ring, found[i], p));
        }
    }
    return to_sorted_handles(ring, kind, std::move(found));
}

std::vector<IdealHandle> enumerate_ideals_oracle(const FiniteRing& ring, IdealKind kind) {
    const std::size_t n = ring.order();
    if (n > 16) throw Error(ErrorCode::OrderTooLarge, "subset-scan oracle is limited to order 16");
    std::vector<Bitset> found;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (!((mask >> ring.zero()) & 1U)) continue;
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) b.set(i);
        if (is_ideal(ElementSubset(ring, b), kind)) found.push_back(std::move(b));
    }
    return to_sorted_handles(ring, kind, std::move(found));
}

ElementSubset ideal_product(const ElementSubset& a, const ElementSubset& b) {
    require_same_ring(a.ring(), b.ring(), "ideal_product");
    return ElementSubset(a.ring(), product_bits(a.ring(), a.bits(), b.bits()));
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a.ring(), b.ring(), "ideal_sum");
    if (a.kind != b.kind) throw Error(ErrorCode::KindMismatch, "ideal_sum: operands are ideals of different kinds");
    ElementSubset s(a.ring(), extend_subgroup(a.ring(), a.bits(), b.bits()));
    const bool proper = !s.is_whole();
    return IdealHandle{std::move(s), a.kind, proper};
}

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a.ring(), b.ring(), "ideal_intersection");
    if (a.kind != b.kind)
        throw Error(ErrorCode::KindMismatch, "ideal_intersection: operands are ideals of different kinds");
    ElementSubset s(a.ring(), a.bits() & b.bits());
    const bool proper = !s.is_whole();
    return IdealHandle{std::move(s), a.kind, proper};
}

ElementSubset colon(const ElementSubset& i, const ElementSubset& j, ColonSide side) {
    require_same_ring(i.ring(), j.ring(), "colon");
    const FiniteRing& ring = i.ring();
    const auto n = static_cast<Index>(ring.order());
    const auto js = j.members();
    ElementSubset out(ring);
    for (Index x = 0; x < n; ++x) {
        bool ok = true;
        for (auto y : js) {
            const Index p = side == ColonSide::Right ? ring.mul(y, x) : ring.mul(x, y);
            if (!i.contains(p)) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(x);
    }
    return out;
}

ElementSubset aRb_set(const FiniteRing& ring, Index a, Index b) {
    const auto n = static_cast<Index>(ring.order());
    ElementSubset out(ring);
    for (Index r = 0; r < n; ++r) out.insert(ring.mul(ring.mul(a, r), b));
    return out;
}

IdealUniverse::IdealUniverse(const FiniteRing& ring, IdealKind kind)
    : IdealUniverse(ring, kind, enumerate_ideals(ring, kind)) {}

IdealUniverse::IdealUniverse(const FiniteRing& ring, IdealKind kind, std::vector<IdealHandle> ideals)
    : ring_(&ring), kind_(kind), ideals_(std::move(ideals)) {
    compute_products();
}

void IdealUniverse::compute_products() {
    const std::size_t u = ideals_.size();
    products_.reserve(u * u);
    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < u; ++j) products_.push_back(product_bits(*ring_, ideals_[i].bits(), ideals_[j].bits()));
}

std::optional<std::size_t> IdealUniverse::find(const Bitset& bits) const {
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        if (ideals_[i].bits() == bits) return i;
    return std::nullopt;
}

} // namespace aprime
