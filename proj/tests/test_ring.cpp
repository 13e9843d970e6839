#include <gtest/gtest.h>

#include <random>

#include "aprime/bitset.hpp"
#include "aprime/constructions.hpp"
#include "aprime/error.hpp"
#include "aprime/ring.hpp"
#include "support.hpp"

using namespace aprime;

namespace {

RawRing zmod_raw(std::size_t n) {
    RawRing raw;
    raw.name = "z" + std::to_string(n);
    raw.order = n;
    raw.add.assign(n, std::vector<std::int64_t>(n));
    raw.mul.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            raw.add[a][b] = static_cast<std::int64_t>((a + b) % n);
            raw.mul[a][b] = static_cast<std::int64_t>((a * b) % n);
        }
    return raw;
}

RawRing klein_raw() {
    // 0, a, b, c with a+b = c; x·a = x·b = x and x·c = 0 for x ≠ 0.
    RawRing raw;
    raw.name = "klein";
    raw.order = 4;
    raw.add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    raw.mul = {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 2, 2, 0}, {0, 3, 3, 0}};
    raw.labels = std::vector<std::string>{"0", "a", "b", "c"};
    return raw;
}

ErrorCode code_of(const RawRing& raw) {
    try {
        validate_ring(raw);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected validation to fail";
    return ErrorCode::IoError;
}

} // namespace

TEST(Bitset, BasicOperations) {
    Bitset a(70), b(70);
    a.set(0);
    a.set(65);
    b.set(65);
    b.set(3);
    EXPECT_EQ(a.count(), 2u);
    EXPECT_EQ((a & b).members(), std::vector<std::size_t>{65});
    EXPECT_EQ((a | b).count(), 3u);
    EXPECT_EQ((a - b).members(), std::vector<std::size_t>{0});
    EXPECT_FALSE(a.is_subset_of(b));
    EXPECT_TRUE((a & b).is_subset_of(b));
    Bitset all(70);
    all.set_all();
    EXPECT_TRUE(all.all());
    EXPECT_EQ(all.count(), 70u);
}

TEST(Bitset, CanonicalOrderIsPopcountThenValue) {
    Bitset a(8), b(8), c(8);
    a.set(7);
    b.set(0);
    b.set(1);
    c.set(6);
    EXPECT_TRUE(canonical_order(a, b) < 0);
    EXPECT_TRUE(canonical_order(c, a) < 0);
    EXPECT_TRUE(canonical_order(a, a) == 0);
}

TEST(Validate, ExampleTablesAreANoncommutativeRingWithoutIdentity) {
    const auto r = validate_ring(klein_raw());
    EXPECT_EQ(r->order(), 4u);
    const auto props = ring_properties(*r);
    EXPECT_FALSE(props.commutative);
    EXPECT_FALSE(props.has_identity);
    EXPECT_FALSE(props.identity_index.has_value());
    EXPECT_EQ(r->label(3), "c");
}

TEST(Validate, OneElementRingHasZeroAsIdentity) {
    const auto r = validate_ring(zmod_raw(1));
    EXPECT_EQ(r->zero(), 0u);
    ASSERT_TRUE(r->identity());
    EXPECT_EQ(*r->identity(), 0u);
}

TEST(Validate, CorruptedZ4IsNotDistributive) {
    auto raw = zmod_raw(4);
    raw.mul[2][3] = 1;
    EXPECT_EQ(code_of(raw), ErrorCode::NotDistributive);
}

TEST(Validate, ShapeAndRangeErrors) {
    auto raw = zmod_raw(3);
    raw.order = 2;
    EXPECT_EQ(code_of(raw), ErrorCode::BadTableShape);

    raw = zmod_raw(3);
    raw.add[1][1] = 5;
    EXPECT_EQ(code_of(raw), ErrorCode::BadTableShape);

    raw = zmod_raw(3);
    raw.mul[0][0] = -1;
    EXPECT_EQ(code_of(raw), ErrorCode::BadTableShape);

    raw = zmod_raw(3);
    raw.labels = std::vector<std::string>{"x"};
    EXPECT_EQ(code_of(raw), ErrorCode::BadTableShape);
}

TEST(Validate, AdditiveGroupErrors) {
    auto raw = zmod_raw(3);
    raw.add[0][1] = 2; // not commutative any more
    EXPECT_EQ(code_of(raw), ErrorCode::NotAbelianGroup);

    raw = zmod_raw(2);
    raw.add = {{0, 0}, {0, 0}}; // 1 has no inverse and 0 is not neutral for 1
    EXPECT_EQ(code_of(raw), ErrorCode::NotAbelianGroup);
}

TEST(Validate, NonAssociativeMultiplication) {
    // Z2 x Z2 with the bilinear product e1e2 = e1, e2e1 = e2: distributive,
    // but (e1e2)e1 = 0 while e1(e2e1) = e1.
    RawRing raw;
    raw.name = "na";
    raw.order = 4;
    raw.add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const auto bil = [](int x, int y) {
        const int x1 = x & 1, x2 = (x >> 1) & 1, y1 = y & 1, y2 = (y >> 1) & 1;
        const int c1 = x1 & y2;
        const int c2 = x2 & y1;
        return c1 | (c2 << 1);
    };
    raw.mul.assign(4, std::vector<std::int64_t>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) raw.mul[x][y] = bil(x, y);
    ASSERT_FALSE(oracle::ring_axioms(raw));
    EXPECT_EQ(code_of(raw), ErrorCode::NotAssociative);
}

TEST(Validate, OrderLimit) {
    EXPECT_EQ(code_of(RawRing{"empty", 0, {}, {}, std::nullopt}), ErrorCode::BadTableShape);
    try {
        validate_ring(zmod_raw(10), 8);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OrderTooLarge);
    }
}

TEST(Validate, ZeroIsDiscoveredNotPositional) {
    std::mt19937 rng(7);
    const auto z6 = zmod(6);
    for (int trial = 0; trial < 20; ++trial) {
        const auto perm = gen::random_perm(6, rng);
        const auto r = gen::permuted(*z6, perm);
        EXPECT_EQ(r->zero(), perm[0]);
        ASSERT_TRUE(r->identity());
        EXPECT_EQ(*r->identity(), perm[1]);
        EXPECT_EQ(r->label(perm[5]), "5");
    }
}

TEST(RingProperties, Examples) {
    const auto z12 = ring_properties(*zmod(12));
    EXPECT_TRUE(z12.commutative);
    EXPECT_TRUE(z12.has_identity);
    EXPECT_EQ(z12.identity_index, std::optional<Index>(1));

    const auto m = matrix_ring(2, 2);
    const auto mp = ring_properties(*m);
    EXPECT_FALSE(mp.commutative);
    ASSERT_TRUE(mp.has_identity);
    EXPECT_EQ(*mp.identity_index, encode_matrix(2, 2, {1, 0, 0, 1}));
}

TEST(RingProperty, CorruptedTablesAreRejectedExactlyWhenTheOracleRejects) {
    std::mt19937 rng(20240611);
    const auto pool = gen::small_pool();
    int rejected = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto& base = pool[rng() % pool.size()];
        if (base->order() < 2 || base->order() > 8) continue;
        RawRing raw = to_raw(*base);
        const std::size_t n = raw.order;
        auto& table = (rng() % 2) ? raw.add : raw.mul;
        const std::size_t i = rng() % n, j = rng() % n;
        table[i][j] = static_cast<std::int64_t>(rng() % n);
        const bool ok = oracle::ring_axioms(raw);
        bool accepted = true;
        try {
            validate_ring(raw);
        } catch (const Error&) {
            accepted = false;
        }
        EXPECT_EQ(accepted, ok) << base->name() << " entry " << i << "," << j;
        if (!ok) ++rejected;
    }
    EXPECT_GT(rejected, 100);
}

TEST(RingProperty, NegationAndCommutativityFlag) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto r = gen::random_ring(rng);
        for (Index a = 0; a < r->order(); ++a) {
            EXPECT_EQ(r->neg(r->neg(a)), a);
            EXPECT_EQ(r->add(a, r->neg(a)), r->zero());
        }
        if (ring_properties(*r).commutative) {
            for (int k = 0; k < 20; ++k) {
                const Index a = rng() % r->order(), b = rng() % r->order();
                EXPECT_EQ(r->mul(a, b), r->mul(b, a));
            }
        }
    }
}

TEST(Ring, RawRoundTrip) {
    const auto r = matrix_ring(2, 2);
    const auto back = validate_ring(to_raw(*r));
    EXPECT_TRUE(back->same_tables(*r));
    EXPECT_EQ(back->labels(), r->labels());
    EXPECT_EQ(back->name(), r->name());
}

TEST(Ring, MultiplesAndAdditiveOrder) {
    const auto z12 = zmod(12);
    EXPECT_EQ(z12->multiple(5, 3), 3u);
    EXPECT_EQ(z12->additive_order(4), 3u);
    EXPECT_EQ(z12->additive_order(0), 1u);
}
