#include <gtest/gtest.h>

#include <random>

#include "aprime/constructions.hpp"
#include "aprime/error.hpp"
#include "aprime/predicates.hpp"
#include "aprime/ring_io.hpp"
#include "support.hpp"

using namespace aprime;

namespace {

constexpr Index k0 = 0, kA = 1, kB = 2, kC = 3;

struct Example {
    RingPtr ring = builtin_example("ex-2-1-ii");
    IdealUniverse u{*ring, IdealKind::Right};
    IdealHandle zero = as_ideal(ElementSubset::zero(*ring), IdealKind::Right);
    IdealHandle P = as_ideal(ElementSubset(*ring, {k0, kA}), IdealKind::Right);
    IdealHandle I = as_ideal(ElementSubset(*ring, {k0, kB}), IdealKind::Right);
    IdealHandle J = as_ideal(ElementSubset(*ring, {k0, kC}), IdealKind::Right);
};

IdealHandle ideal(const RingPtr& r, std::initializer_list<Index> ms, IdealKind kind) {
    return as_ideal(ElementSubset(*r, ms), kind);
}

std::vector<oracle::Set> oracle_sets(const IdealUniverse& u) {
    std::vector<oracle::Set> out;
    for (const auto& i : u.ideals()) out.push_back(oracle::from_bits(i.bits()));
    return out;
}

} // namespace

TEST(Idempotent, Examples) {
    Example ex;
    EXPECT_TRUE(is_idempotent(ex.P));
    EXPECT_FALSE(is_idempotent(ex.J));
    const auto z4 = zmod(4);
    EXPECT_TRUE(is_idempotent(ideal(z4, {0}, IdealKind::TwoSided)));
}

TEST(Prime, Examples) {
    Example ex;
    const auto p = is_prime(ex.P, ex.u);
    EXPECT_FALSE(p.holds);
    ASSERT_TRUE(p.witness);
    // The witness is a genuine failure: AB ⊆ P with neither factor inside P.
    const auto ab = ideal_product(p.witness->a, p.witness->b);
    EXPECT_TRUE(ab.is_subset_of(ex.P.subset));
    EXPECT_FALSE(p.witness->a.subset.is_subset_of(ex.P.subset));
    EXPECT_FALSE(p.witness->b.subset.is_subset_of(ex.P.subset));

    const auto z4 = zmod(4);
    const IdealUniverse u4(*z4, IdealKind::Right);
    EXPECT_TRUE(is_prime(ideal(z4, {0, 2}, IdealKind::Right), u4).holds);

    const auto m = matrix_ring(2, 2);
    const IdealUniverse um(*m, IdealKind::Right);
    EXPECT_TRUE(is_prime(as_ideal(ElementSubset::zero(*m), IdealKind::Right), um).holds);
}

TEST(Weakly, Examples) {
    Example ex;
    EXPECT_TRUE(is_weakly_prime(ex.J, ex.u).holds);
    EXPECT_TRUE(is_weakly_prime(ex.zero, ex.u).holds);
    EXPECT_TRUE(is_weakly_prime(ex.P, ex.u).holds);
    const auto z12 = zmod(12);
    const IdealUniverse u(*z12, IdealKind::Right);
    EXPECT_TRUE(is_weakly_prime(as_ideal(ElementSubset::zero(*z12), IdealKind::Right), u).holds);
}

TEST(Almost, Examples) {
    Example ex;
    EXPECT_TRUE(is_almost_prime(ex.P, ex.u).holds);
    EXPECT_TRUE(is_almost_prime(ex.zero, ex.u).holds);
    const auto z12 = zmod(12);
    const IdealUniverse u(*z12, IdealKind::Right);
    EXPECT_TRUE(is_almost_prime(ideal(z12, {0, 4, 8}, IdealKind::Right), u).holds);
    // {0,6}: (2)(3) = (6) ⊆ P while P² = 0.
    const auto six = is_almost_prime(ideal(z12, {0, 6}, IdealKind::Right), u);
    EXPECT_FALSE(six.holds);
    ASSERT_TRUE(six.witness);
}

TEST(Predicates, ImproperAndForeignIdealsAreRejected) {
    Example ex;
    const auto whole = as_ideal(ElementSubset::whole(*ex.ring), IdealKind::Right);
    for (auto f : {is_prime, is_weakly_prime, is_almost_prime}) {
        try {
            f(whole, ex.u);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ImproperIdeal);
        }
    }
    Example other;
    try {
        is_prime(other.P, ex.u);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
    }
}

TEST(Minimal, Examples) {
    Example ex;
    EXPECT_TRUE(is_minimal(ex.J, ex.u));
    const auto z8 = zmod(8);
    const IdealUniverse u(*z8, IdealKind::Right);
    EXPECT_FALSE(is_minimal(ideal(z8, {0, 2, 4, 6}, IdealKind::Right), u));
    EXPECT_TRUE(is_minimal(ideal(z8, {0, 4}, IdealKind::Right), u));
    EXPECT_THROW(is_minimal(ex.zero, ex.u), Error);
}

TEST(ElementCriteria, Examples) {
    const auto t = upper_triangular(3, 2);
    const Index e12 = encode_triangular(3, 2, {0, 1, 0});
    const Index e22 = encode_triangular(3, 2, {0, 0, 1});
    const Index two_e22 = encode_triangular(3, 2, {0, 0, 2});
    const auto p = as_ideal(ElementSubset(*t, {t->zero(), e22, two_e22}), IdealKind::Right);
    const auto tc = element_criteria(*t, p);
    EXPECT_FALSE(tc.prime);
    ASSERT_TRUE(tc.prime_witness);
    EXPECT_FALSE(p.contains(tc.prime_witness->a));
    EXPECT_FALSE(p.contains(tc.prime_witness->b));
    EXPECT_TRUE(aRb_set(*t, tc.prime_witness->a, tc.prime_witness->b).is_zero());
    EXPECT_FALSE(p.contains(e12));
    EXPECT_TRUE(aRb_set(*t, e12, e12).is_zero());

    const auto z4 = zmod(4);
    const auto c = element_criteria(*z4, ideal(z4, {0, 2}, IdealKind::TwoSided));
    EXPECT_TRUE(c.prime);
    EXPECT_TRUE(c.weakly_prime);
    EXPECT_TRUE(c.almost_prime);

    Example ex;
    try {
        element_criteria(*ex.ring, as_ideal(ElementSubset::zero(*ex.ring), IdealKind::TwoSided));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoIdentity);
    }
    EXPECT_THROW(element_criteria(*z4, as_ideal(ElementSubset::whole(*z4), IdealKind::TwoSided)), Error);
}

TEST(ElementCriteria, TriangularZeroIdealIsNotPrimeViaE12) {
    const auto t = upper_triangular(3, 2);
    const auto c = element_criteria(*t, as_ideal(ElementSubset::zero(*t), IdealKind::TwoSided));
    EXPECT_FALSE(c.prime);
    ASSERT_TRUE(c.prime_witness);
    EXPECT_TRUE(aRb_set(*t, c.prime_witness->a, c.prime_witness->b).is_zero());
}

TEST(Fully, Examples) {
    EXPECT_TRUE(is_fully_almost_prime(*builtin_example("ex-2-1-ii")).holds);
    EXPECT_TRUE(is_fully_almost_prime(*builtin_example("ex-2-1-iii")).holds);

    // Regression pin: Z12 fails at {0,6}, as the oracle confirms.
    const auto z12 = zmod(12);
    const auto f = is_fully_almost_prime(*z12);
    EXPECT_FALSE(f.holds);
    ASSERT_TRUE(f.first_failure);
    EXPECT_EQ(f.first_failure->subset.to_string(), "{0,6}");
    const auto ideals = oracle::all_ideals(*z12, IdealKind::Right);
    EXPECT_FALSE(oracle::holds(*z12, oracle::from_members(12, {0, 6}), ideals, oracle::Notion::Almost));
}

TEST(Classify, ExampleRing) {
    const auto ring = builtin_example("ex-2-1-ii");
    const auto recs = classify_ring(*ring);
    ASSERT_EQ(recs.size(), 4u);
    const auto& zero = recs[0];
    const auto& P = recs[1];
    const auto& I = recs[2];
    const auto& J = recs[3];
    EXPECT_TRUE(zero.ideal.is_zero());
    EXPECT_FALSE(zero.is_minimal);
    for (const auto* r : {&P, &I}) {
        EXPECT_TRUE(r->is_idempotent);
        EXPECT_TRUE(r->is_almost_prime);
        EXPECT_FALSE(r->is_prime);
        EXPECT_TRUE(r->prime_witness);
    }
    EXPECT_EQ(J.ideal.subset.to_string(), "{0,c}");
    EXPECT_TRUE(J.is_weakly_prime);
    EXPECT_TRUE(J.is_minimal);
    EXPECT_FALSE(J.is_idempotent);
    ASSERT_TRUE(J.idempotent_witness);
    EXPECT_EQ(*J.idempotent_witness, kC);
}

TEST(Classify, SmallCases) {
    const auto ring = zmod(4);
    const auto z4 = classify_ring(*ring);
    ASSERT_EQ(z4.size(), 2u);
    EXPECT_TRUE(z4[0].ideal.is_zero());
    EXPECT_EQ(z4[1].ideal.subset.to_string(), "{0,2}");
    EXPECT_TRUE(classify_ring(*zmod(1)).empty());
}

TEST(Classify, TriangularAnalogue) {
    const auto t = upper_triangular(3, 2);
    const IdealUniverse u(*t, IdealKind::Right);
    const auto p = as_ideal(ElementSubset(*t, {t->zero(), encode_triangular(3, 2, {0, 0, 1}),
                                               encode_triangular(3, 2, {0, 0, 2})}),
                            IdealKind::Right);
    const auto rec = classify_ideal(p, u);
    EXPECT_TRUE(rec.is_idempotent);
    EXPECT_TRUE(rec.is_almost_prime);
    EXPECT_FALSE(rec.is_prime);
}

TEST(PredicateProperty, AgreesWithOracleAndChainHolds) {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const auto r = gen::random_ring(rng, 12);
        for (auto kind : {IdealKind::Right, IdealKind::TwoSided}) {
            const IdealUniverse u(*r, kind);
            const auto sets = oracle_sets(u);
            for (const auto& p : u.ideals()) {
                if (!p.proper) continue;
                const auto ps = oracle::from_bits(p.bits());
                const bool pr = is_prime(p, u).holds;
                const bool wp = is_weakly_prime(p, u).holds;
                const bool ap = is_almost_prime(p, u).holds;
                EXPECT_EQ(pr, oracle::holds(*r, ps, sets, oracle::Notion::Prime)) << r->name();
                EXPECT_EQ(wp, oracle::holds(*r, ps, sets, oracle::Notion::Weakly)) << r->name();
                EXPECT_EQ(ap, oracle::holds(*r, ps, sets, oracle::Notion::Almost)) << r->name();
                EXPECT_TRUE(!pr || wp);
                EXPECT_TRUE(!wp || ap);
                EXPECT_TRUE(!is_idempotent(p) || ap);
            }
        }
    }
}

TEST(PredicateProperty, WitnessesReproduceUnderRawDefinitions) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const auto r = gen::random_ring(rng);
        const IdealUniverse u(*r, IdealKind::Right);
        for (const auto& p : u.ideals()) {
            if (!p.proper) continue;
            const auto ps = oracle::from_bits(p.bits());
            const auto p2 = oracle::product(*r, ps, ps);
            for (int which = 0; which < 3; ++which) {
                const auto res = which == 0 ? is_prime(p, u) : which == 1 ? is_weakly_prime(p, u) : is_almost_prime(p, u);
                if (res.holds) continue;
                ASSERT_TRUE(res.witness);
                const auto a = oracle::from_bits(res.witness->a.bits());
                const auto b = oracle::from_bits(res.witness->b.bits());
                const auto ab = oracle::product(*r, a, b);
                EXPECT_TRUE(oracle::subset(ab, ps));
                EXPECT_FALSE(oracle::subset(a, ps));
                EXPECT_FALSE(oracle::subset(b, ps));
                if (which == 1) EXPECT_FALSE(oracle::is_zero(*r, ab));
                if (which == 2) EXPECT_FALSE(oracle::subset(ab, p2));
            }
        }
    }
}

TEST(PredicateProperty, IdentityRingsRightAndIdealUniversesAgree) {
    for (const auto& entry : default_corpus()) {
        const FiniteRing& R = *entry.ring;
        if (!R.has_identity()) continue;
        const IdealUniverse right(R, IdealKind::Right);
        const IdealUniverse two(R, IdealKind::TwoSided);
        for (const auto& p : two.ideals()) {
            if (!p.proper) continue;
            const bool ap = is_almost_prime(p, two).holds;
            EXPECT_EQ(is_almost_prime(p, right).holds, ap) << entry.name;
            EXPECT_EQ(element_criteria(R, p).almost_prime, ap) << entry.name;
        }
    }
}
