#include "aprime/ring.hpp"

#include <sstream>

#include "aprime/error.hpp"

namespace aprime {

namespace {

std::string triple(Index a, Index b, Index c) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

std::vector<Index> flatten(const std::vector<std::vector<std::int64_t>>& table, std::size_t n,
                           const char* which) {
    if (table.size() != n) {
        std::ostringstream os;
        os << which << " table has " << table.size() << " rows, expected " << n;
        throw Error(ErrorCode::BadTableShape, os.str());
    }
    std::vector<Index> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n) {
            std::ostringstream os;
            os << which << " table row " << r << " has " << table[r].size() << " entries, expected " << n;
            throw Error(ErrorCode::BadTableShape, os.str());
        }
        for (std::size_t c = 0; c < n; ++c) {
            const auto v = table[r][c];
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                std::ostringstream os;
                os << which << "[" << r << "][" << c << "] = " << v << " is outside [0, " << n << ")";
                throw Error(ErrorCode::BadTableShape, os.str());
            }
            flat.push_back(static_cast<Index>(v));
        }
    }
    return flat;
}

} // namespace

Index FiniteRing::multiple(std::size_t n, Index a) const noexcept {
    Index acc = zero_;
    Index base = a;
    while (n) {
        if (n & 1U) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

std::size_t FiniteRing::additive_order(Index a) const noexcept {
    std::size_t k = 1;
    for (Index x = a; x != zero_; x = add(x, a)) ++k;
    return k;
}

RingPtr FiniteRing::renamed(std::string name) const {
    auto copy = std::shared_ptr<FiniteRing>(new FiniteRing(*this));
    copy->name_ = std::move(name);
    return copy;
}

RingPtr validate_ring(const RawRing& raw, std::size_t max_order) {
    const std::size_t n = raw.order;
    if (n == 0) throw Error(ErrorCode::BadTableShape, "order must be positive");
    if (n > max_order) {
        std::ostringstream os;
        os << "order " << n << " exceeds the configured maximum " << max_order;
        throw Error(ErrorCode::OrderTooLarge, os.str());
    }

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->n_ = n;
    ring->name_ = raw.name;
    ring->add_ = flatten(raw.add, n, "add");
    ring->mul_ = flatten(raw.mul, n, "mul");
    if (raw.labels) {
        if (raw.labels->size() != n) {
            std::ostringstream os;
            os << "labels has " << raw.labels->size() << " entries, expected " << n;
            throw Error(ErrorCode::BadTableShape, os.str());
        }
        ring->labels_ = *raw.labels;
    } else {
        ring->labels_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) ring->labels_.push_back(std::to_string(i));
    }

    const FiniteRing& R = *ring;
    const auto N = static_cast<Index>(n);

    // Additive group.
    for (Index a = 0; a < N; ++a)
        for (Index b = 0; b < N; ++b)
            if (R.add(a, b) != R.add(b, a)) {
                std::ostringstream os;
                os << "addition is not commutative at pair (" << a << ", " << b << ")";
                throw Error(ErrorCode::NotAbelianGroup, os.str());
            }
    for (Index a = 0; a < N; ++a)
        for (Index b = 0; b < N; ++b)
            for (Index c = 0; c < N; ++c)
                if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
                    throw Error(ErrorCode::NotAbelianGroup, "addition is not associative at triple " + triple(a, b, c));

    std::optional<Index> zero;
    for (Index e = 0; e < N && !zero; ++e) {
        bool ok = true;
        for (Index a = 0; a < N && ok; ++a) ok = R.add(e, a) == a;
        if (ok) zero = e;
    }
    if (!zero) throw Error(ErrorCode::NotAbelianGroup, "addition has no neutral element");
    ring->zero_ = *zero;

    ring->neg_.assign(n, 0);
    for (Index a = 0; a < N; ++a) {
        bool found = false;
        for (Index b = 0; b < N; ++b)
            if (R.add(a, b) == *zero) {
                ring->neg_[a] = b;
                found = true;
                break;
            }
        if (!found) {
            std::ostringstream os;
            os << "element " << a << " has no additive inverse";
            throw Error(ErrorCode::NotAbelianGroup, os.str());
        }
    }

    // Distributivity is reported ahead of multiplicative associativity.
    for (Index a = 0; a < N; ++a)
        for (Index b = 0; b < N; ++b)
            for (Index c = 0; c < N; ++c) {
                if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
                    throw Error(ErrorCode::NotDistributive,
                                "left distributivity a(b+c) = ab+ac fails at triple " + triple(a, b, c));
                if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
                    throw Error(ErrorCode::NotDistributive,
                                "right distributivity (a+b)c = ac+bc fails at triple " + triple(a, b, c));
            }

    for (Index a = 0; a < N; ++a)
        for (Index b = 0; b < N; ++b)
            for (Index c = 0; c < N; ++c)
                if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
                    throw Error(ErrorCode::NotAssociative,
                                "multiplication is not associative at triple " + triple(a, b, c));

    ring->commutative_ = true;
    for (Index a = 0; a < N && ring->commutative_; ++a)
        for (Index b = a + 1; b < N; ++b)
            if (R.mul(a, b) != R.mul(b, a)) {
                ring->commutative_ = false;
                break;
            }

    // A two-sided identity is unique when it exists.
    for (Index e = 0; e < N; ++e) {
        bool ok = true;
        for (Index a = 0; a < N && ok; ++a) ok = R.mul(e, a) == a && R.mul(a, e) == a;
        if (ok) {
            ring->identity_ = e;
            break;
        }
    }
    return ring;
}

RingPtr make_ring(std::string name, std::size_t order, const std::vector<Index>& add,
                  const std::vector<Index>& mul, std::optional<std::vector<std::string>> labels,
                  std::size_t max_order) {
    RawRing raw;
    raw.name = std::move(name);
    raw.order = order;
    raw.add.assign(order, std::vector<std::int64_t>(order));
    raw.mul.assign(order, std::vector<std::int64_t>(order));
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c) {
            raw.add[r][c] = add[r * order + c];
            raw.mul[r][c] = mul[r * order + c];
        }
    raw.labels = std::move(labels);
    return validate_ring(raw, max_order);
}

RingProperties ring_properties(const FiniteRing& ring) {
    return RingProperties{ring.commutative(), ring.has_identity(), ring.identity()};
}

RawRing to_raw(const FiniteRing& ring) {
    const std::size_t n = ring.order();
    RawRing raw;
    raw.name = ring.name();
    raw.order = n;
    raw.add.assign(n, std::vector<std::int64_t>(n));
    raw.mul.assign(n, std::vector<std::int64_t>(n));
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c) {
            raw.add[r][c] = ring.add(r, c);
            raw.mul[r][c] = ring.mul(r, c);
        }
    raw.labels = ring.labels();
    return raw;
}

} // namespace aprime
