#include "aprime/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "aprime/error.hpp"

namespace aprime {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t max_order) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && v > max_order / base) {
            std::ostringstream os;
            os << base << "^" << exp << " exceeds the configured maximum order " << max_order;
            throw Error(ErrorCode::OrderTooLarge, os.str());
        }
        v *= base;
    }
    if (v > max_order) {
        std::ostringstream os;
        os << "order " << v << " exceeds the configured maximum " << max_order;
        throw Error(ErrorCode::OrderTooLarge, os.str());
    }
    return v;
}

std::int64_t mod(std::int64_t v, std::size_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    return ((v % mm) + mm) % mm;
}

/// Digits of x in base m, most significant first.
std::vector<std::int64_t> digits(std::size_t x, std::size_t base, std::size_t count) {
    std::vector<std::int64_t> d(count);
    for (std::size_t i = count; i-- > 0;) {
        d[i] = static_cast<std::int64_t>(x % base);
        x /= base;
    }
    return d;
}

Index from_digits(const std::vector<std::int64_t>& d, std::size_t base) {
    std::size_t x = 0;
    for (auto v : d) x = x * base + static_cast<std::size_t>(mod(v, base));
    return static_cast<Index>(x);
}

/// Shared builder for the full and triangular matrix rings; `positions`
/// lists the (row, col) slots that carry digits.
RingPtr build_matrix_family(std::string name, std::size_t base, std::size_t k,
                            const std::vector<std::pair<std::size_t, std::size_t>>& positions,
                            std::size_t max_order) {
    if (base < 1 || k < 1) throw Error(ErrorCode::UnknownName, "matrix rings need base >= 1 and k >= 1");
    const std::size_t n = checked_power(base, positions.size(), max_order);

    const auto to_matrix = [&](std::size_t x) {
        std::vector<std::int64_t> m(k * k, 0);
        const auto d = digits(x, base, positions.size());
        for (std::size_t p = 0; p < positions.size(); ++p) m[positions[p].first * k + positions[p].second] = d[p];
        return m;
    };
    const auto to_index = [&](const std::vector<std::int64_t>& m) {
        std::vector<std::int64_t> d(positions.size());
        for (std::size_t p = 0; p < positions.size(); ++p) d[p] = m[positions[p].first * k + positions[p].second];
        return from_digits(d, base);
    };

    std::vector<std::vector<std::int64_t>> mats(n);
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        mats[x] = to_matrix(x);
        std::string l = "[";
        for (std::size_t i = 0; i < k; ++i) {
            if (i) l += ';';
            for (std::size_t j = 0; j < k; ++j) {
                if (j) l += ' ';
                l += std::to_string(mats[x][i * k + j]);
            }
        }
        labels[x] = l + "]";
    }

    std::vector<Index> add(n * n), mul(n * n);
    std::vector<std::int64_t> tmp(k * k);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t e = 0; e < k * k; ++e) tmp[e] = mod(mats[x][e] + mats[y][e], base);
            add[x * n + y] = to_index(tmp);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    std::int64_t s = 0;
                    for (std::size_t t = 0; t < k; ++t) s += mats[x][i * k + t] * mats[y][t * k + j];
                    tmp[i * k + j] = mod(s, base);
                }
            mul[x * n + y] = to_index(tmp);
        }
    return make_ring(std::move(name), n, add, mul, std::move(labels), max_order);
}

std::vector<std::pair<std::size_t, std::size_t>> full_positions(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) p.emplace_back(i, j);
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> triangular_positions(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) p.emplace_back(i, j);
    return p;
}

} // namespace

RingPtr zmod(std::size_t n, std::size_t max_order) {
    if (n < 1) throw Error(ErrorCode::UnknownName, "zmod needs n >= 1");
    if (n > max_order) {
        std::ostringstream os;
        os << "order " << n << " exceeds the configured maximum " << max_order;
        throw Error(ErrorCode::OrderTooLarge, os.str());
    }
    std::vector<Index> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Index>((a + b) % n);
            mul[a * n + b] = static_cast<Index>((a * b) % n);
        }
    return make_ring("zmod:" + std::to_string(n), n, add, mul, std::nullopt, max_order);
}

RingPtr matrix_ring(std::size_t base, std::size_t k, std::size_t max_order) {
    return build_matrix_family("matrix:" + std::to_string(base) + ":" + std::to_string(k), base, k, full_positions(k),
                               max_order);
}

RingPtr upper_triangular(std::size_t base, std::size_t k, std::size_t max_order) {
    return build_matrix_family("tri:" + std::to_string(base) + ":" + std::to_string(k), base, k,
                               triangular_positions(k), max_order);
}

Index encode_matrix(std::size_t base, std::size_t k, const std::vector<std::int64_t>& entries) {
    if (entries.size() != k * k) throw Error(ErrorCode::BadTableShape, "matrix needs k*k entries");
    return from_digits(entries, base);
}

Index encode_triangular(std::size_t base, std::size_t k, const std::vector<std::int64_t>& entries) {
    if (entries.size() != k * (k + 1) / 2) throw Error(ErrorCode::BadTableShape, "triangular matrix needs k(k+1)/2 entries");
    return from_digits(entries, base);
}

SubringResult subring(const FiniteRing& parent, const ElementSubset& s, std::string name) {
    if (&s.ring() != &parent) throw Error(ErrorCode::RingMismatch, "subring: subset belongs to another ring");
    const auto L = [&](Index i) { return parent.label(i); };
    if (!s.contains(parent.zero())) throw Error(ErrorCode::NotClosed, "subset does not contain zero " + L(parent.zero()));
    const auto members = s.members();
    for (auto x : members) {
        if (!s.contains(parent.neg(x))) throw Error(ErrorCode::NotClosed, "negation of " + L(x) + " leaves the subset");
        for (auto y : members) {
            if (!s.contains(parent.add(x, y)))
                throw Error(ErrorCode::NotClosed, L(x) + " + " + L(y) + " = " + L(parent.add(x, y)) + " leaves the subset");
            if (!s.contains(parent.mul(x, y)))
                throw Error(ErrorCode::NotClosed, L(x) + " * " + L(y) + " = " + L(parent.mul(x, y)) + " leaves the subset");
        }
    }

    std::vector<Index> local(parent.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Index>(i);
    const std::size_t m = members.size();
    std::vector<Index> add(m * m), mul(m * m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(parent.label(members[i]));
        for (std::size_t j = 0; j < m; ++j) {
            add[i * m + j] = local[parent.add(members[i], members[j])];
            mul[i * m + j] = local[parent.mul(members[i], members[j])];
        }
    }
    return SubringResult{make_ring(std::move(name), m, add, mul, std::move(labels), parent.order()), members};
}

IdealHandle ProductRing::ideal_embed(const IdealHandle& i, const IdealHandle& j) const {
    if (&i.ring() != left.get() || &j.ring() != right.get())
        throw Error(ErrorCode::RingMismatch, "ideal_embed: ideals must come from the two factors");
    IdealKind kind = i.kind;
    if (i.kind != j.kind) {
        if (i.kind == IdealKind::TwoSided) kind = j.kind;
        else if (j.kind == IdealKind::TwoSided) kind = i.kind;
        else throw Error(ErrorCode::KindMismatch, "ideal_embed: a left and a right ideal do not combine");
    }
    ElementSubset out(*ring);
    i.bits().for_each([&](std::size_t a) {
        j.bits().for_each([&](std::size_t b) { out.insert(pair(static_cast<Index>(a), static_cast<Index>(b))); });
    });
    const bool proper = !out.is_whole();
    return IdealHandle{std::move(out), kind, proper};
}

ProductRing direct_product(const RingPtr& r, const RingPtr& s, std::size_t max_order) {
    const std::size_t nr = r->order(), ns = s->order();
    if (nr > max_order / ns) {
        std::ostringstream os;
        os << "product order " << nr * ns << " exceeds the configured maximum " << max_order;
        throw Error(ErrorCode::OrderTooLarge, os.str());
    }
    const std::size_t n = nr * ns;
    std::vector<Index> add(n * n), mul(n * n);
    std::vector<std::string> labels(n);
    for (Index a = 0; a < nr; ++a)
        for (Index b = 0; b < ns; ++b) labels[a * ns + b] = "(" + r->label(a) + "," + s->label(b) + ")";
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            const Index xa = x / ns, xb = x % ns, ya = y / ns, yb = y % ns;
            add[x * n + y] = static_cast<Index>(r->add(xa, ya) * ns + s->add(xb, yb));
            mul[x * n + y] = static_cast<Index>(r->mul(xa, ya) * ns + s->mul(xb, yb));
        }
    RingPtr ring = make_ring("product:" + r->name() + "," + s->name(), n, add, mul, std::move(labels), max_order);
    std::vector<Index> pl(n), pr(n);
    for (Index x = 0; x < n; ++x) {
        pl[x] = static_cast<Index>(x / ns);
        pr[x] = static_cast<Index>(x % ns);
    }
    RingHom left = validate_hom(std::move(pl), ring, r);
    RingHom right = validate_hom(std::move(pr), ring, s);
    return ProductRing{ring, r, s, std::move(left), std::move(right)};
}

IdealHandle QuotientDescriptor::image_of_ideal(const IdealHandle& p) const {
    if (&p.ring() != parent.get()) throw Error(ErrorCode::RingMismatch, "quotient image: ideal is not in the parent");
    ElementSubset out(*ring);
    p.bits().for_each([&](std::size_t a) { out.insert(projection.map[a]); });
    const bool proper = !out.is_whole();
    return IdealHandle{std::move(out), p.kind, proper};
}

QuotientDescriptor quotient(const RingPtr& r, const IdealHandle& i) {
    const FiniteRing& R = *r;
    if (&i.ring() != r.get()) throw Error(ErrorCode::RingMismatch, "quotient: ideal belongs to another ring");
    if (auto v = ideal_violation(i.subset, IdealKind::TwoSided))
        throw Error(ErrorCode::NotTwoSided, i.subset.to_string() + " is not a two-sided ideal: " + v->describe(R));

    const std::size_t n = R.order();
    const auto im = i.subset.members();
    std::vector<Index> rep_of(n);
    for (Index a = 0; a < n; ++a) {
        Index best = a;
        for (auto x : im) best = std::min(best, R.add(a, x));
        rep_of[a] = best;
    }
    std::vector<Index> reps;
    std::vector<Index> coset_index(n, 0);
    for (Index a = 0; a < n; ++a)
        if (rep_of[a] == a) {
            coset_index[a] = static_cast<Index>(reps.size());
            reps.push_back(a);
        }
    const std::size_t m = reps.size();
    std::vector<Index> add(m * m), mul(m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            add[x * m + y] = coset_index[rep_of[R.add(reps[x], reps[y])]];
            mul[x * m + y] = coset_index[rep_of[R.mul(reps[x], reps[y])]];
        }
    std::vector<std::string> labels;
    for (auto rep : reps) labels.push_back(i.is_zero() ? R.label(rep) : "[" + R.label(rep) + "]");

    RingPtr q = make_ring(R.name() + "/" + i.subset.to_string(), m, add, mul, std::move(labels), n);
    std::vector<Index> map(n);
    for (Index a = 0; a < n; ++a) map[a] = coset_index[rep_of[a]];
    RingHom proj = validate_hom(std::move(map), r, q);
    IdealHandle modulus{i.subset, IdealKind::TwoSided, !i.subset.is_whole()};
    return QuotientDescriptor{r, std::move(modulus), q, std::move(reps), std::move(proj)};
}

RingPtr builtin_example(std::string_view name, std::size_t max_order) {
    if (name == "ex-2-1-ii") {
        // Klein four-group addition; x·a = x·b = x and x·c = 0.
        constexpr std::size_t n = 4;
        std::vector<Index> add(n * n), mul(n * n);
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) {
                add[x * n + y] = x ^ y;
                mul[x * n + y] = (x == 0 || y == 0 || y == 3) ? 0 : x;
            }
        return make_ring("paper:ex-2-1-ii", n, add, mul, std::vector<std::string>{"0", "a", "b", "c"}, max_order);
    }
    if (name == "ex-2-1-iii") {
        const RingPtr m = matrix_ring(2, 2, std::max<std::size_t>(max_order, 16));
        const Index p = encode_matrix(2, 2, {1, 1, 0, 0});
        const Index i = encode_matrix(2, 2, {0, 0, 1, 1});
        const Index j = encode_matrix(2, 2, {1, 1, 1, 1});
        return subring(*m, ElementSubset(*m, {m->zero(), p, i, j}), "paper:ex-2-1-iii").ring;
    }
    if (name.starts_with("ex-2-1-iv-zp")) {
        std::size_t p = 3;
        auto rest = name.substr(std::string_view("ex-2-1-iv-zp").size());
        if (!rest.empty()) {
            if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')')
                throw Error(ErrorCode::UnknownName, "unknown built-in example '" + std::string(name) + "'");
            const auto digits_view = rest.substr(1, rest.size() - 2);
            auto [ptr, ec] = std::from_chars(digits_view.data(), digits_view.data() + digits_view.size(), p);
            if (ec != std::errc() || ptr != digits_view.data() + digits_view.size() || p < 2)
                throw Error(ErrorCode::UnknownName, "bad modulus in '" + std::string(name) + "'");
        }
        return upper_triangular(p, 2, max_order)->renamed("paper:ex-2-1-iv-zp(" + std::to_string(p) + ")");
    }
    throw Error(ErrorCode::UnknownName, "unknown built-in example '" + std::string(name) + "'");
}

namespace {

struct IsoSearch {
    const FiniteRing& r;
    const FiniteRing& s;
    std::vector<std::size_t> order_r, order_s;
    std::vector<Index> image;
    std::vector<bool> used;
    std::vector<Index> assigned;
    static constexpr Index unset = ~Index{0};

    bool consistent(Index a) const {
        for (auto b : assigned) {
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                const Index sum = r.add(x, y), prod = r.mul(x, y);
                if (image[sum] != unset && image[sum] != s.add(image[x], image[y])) return false;
                if (image[prod] != unset && image[prod] != s.mul(image[x], image[y])) return false;
            }
        }
        return true;
    }

    bool full_check() const {
        for (Index x = 0; x < r.order(); ++x)
            for (Index y = 0; y < r.order(); ++y)
                if (image[r.add(x, y)] != s.add(image[x], image[y]) || image[r.mul(x, y)] != s.mul(image[x], image[y]))
                    return false;
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == r.order()) return full_check();
        const auto a = static_cast<Index>(depth);
        if (image[a] != unset) return extend(depth + 1);
        for (Index t = 0; t < s.order(); ++t) {
            if (used[t] || order_r[a] != order_s[t]) continue;
            image[a] = t;
            used[t] = true;
            assigned.push_back(a);
            if (consistent(a) && extend(depth + 1)) return true;
            assigned.pop_back();
            used[t] = false;
            image[a] = unset;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Index>> find_isomorphism(const FiniteRing& r, const FiniteRing& s) {
    if (r.order() > 8 || s.order() > 8) throw Error(ErrorCode::OrderTooLarge, "isomorphism search is limited to order 8");
    if (r.order() != s.order()) return std::nullopt;
    IsoSearch search{r, s, {}, {}, std::vector<Index>(r.order(), IsoSearch::unset), std::vector<bool>(s.order(), false), {}};
    for (Index a = 0; a < r.order(); ++a) search.order_r.push_back(r.additive_order(a));
    for (Index a = 0; a < s.order(); ++a) search.order_s.push_back(s.additive_order(a));
    search.image[r.zero()] = s.zero();
    search.used[s.zero()] = true;
    search.assigned.push_back(r.zero());
    if (!search.extend(0)) return std::nullopt;
    return search.image;
}

} // namespace aprime
