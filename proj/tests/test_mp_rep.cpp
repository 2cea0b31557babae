#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mpla/mp_rep.hpp"

using namespace mpla;
using fx::Q;

namespace {

MPRepresentation<Q> random_rep_candidate(std::mt19937& rng, const MatchedPair<Q>& mp, int p, int q, int density) {
    MPRepresentation<Q> r(mp, p, q);
    for (auto* t : {&r.rho_V, &r.psi_V, &r.rho_W, &r.psi_W, &r.alpha, &r.beta})
        for (int i = 0; i < t->d0(); ++i)
            for (int j = 0; j < t->d1(); ++j)
                for (int k = 0; k < t->d2(); ++k) (*t)(i, j, k) = fx::rand_sparse(rng, density);
    return r;
}

} // namespace

TEST(MPRep, AdjointAndCoadjointOfFixturesAreValid) {
    for (const auto& mp : fx::small_matched_pairs()) {
        EXPECT_TRUE(validate_mp_representation(adjoint_representation(mp)).valid());
        EXPECT_TRUE(validate_mp_representation(coadjoint_representation(mp)).valid());
    }
}

TEST(MPRep, DoubledRhoWBreaksFirstIdentity) {
    // MP-A adjoint with ρ_W = 2ρ: α_{[x,x]}h = 0 but 2ρ_x α_x h - α_x ρ_x h = 2h - h = h
    auto r = adjoint_representation(fx::mp_a());
    r.rho_W = r.rho_W.scaled(Q(2));
    auto rep = validate_mp_representation(r);
    EXPECT_FALSE(rep.valid());
    const auto* c = rep.find("(1-iden)");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed());
    EXPECT_EQ(c->witnesses[0].residual, "(-1)");
    EXPECT_EQ(rep.passed_count(), rep.checks.size() - 1);
}

TEST(MPRep, DoubledAlphaOnMpAStaysValid) {
    // with g, h one-dimensional and abelian every identity involving α is linear in α and vanishes
    auto r = adjoint_representation(fx::mp_a());
    r.alpha = r.alpha.scaled(Q(2));
    EXPECT_TRUE(validate_mp_representation(r).valid());
}

TEST(MPRep, SemidirectProductIffRepresentation) {
    std::mt19937 rng(67);
    int valid = 0, invalid = 0;
    auto fixtures = fx::small_matched_pairs();
    for (int t = 0; t < 120; ++t) {
        const auto& mp = fixtures[t % fixtures.size()];
        MPRepresentation<Q> r = (t % 4 == 0) ? adjoint_representation(mp)
                               : (t % 4 == 1) ? coadjoint_representation(mp)
                                              : random_rep_candidate(rng, mp, 1 + t % 2, 1 + (t / 2) % 2, 15);
        bool rv = validate_mp_representation(r).valid();
        auto sd = semidirect_product_unchecked(r);
        EXPECT_EQ(rv, validate_matched_pair(sd).valid()) << "candidate " << t;
        EXPECT_EQ(rv, validate_lie_rep(induced_bicross_rep(r)).valid()) << "candidate " << t;
        (rv ? valid : invalid)++;
    }
    EXPECT_GT(valid, 20);
    EXPECT_GT(invalid, 20);
}

TEST(MPRep, ExtractInvertsInduced) {
    for (const auto& mp : fx::small_matched_pairs()) {
        for (const auto& r : {adjoint_representation(mp), coadjoint_representation(mp)}) {
            auto lr = induced_bicross_rep(r);
            auto back = extract_rep_from_bicross(mp, lr, r.p, r.q);
            EXPECT_TRUE(back == r);
            EXPECT_TRUE(validate_mp_representation(back).valid());
        }
    }
}

TEST(MPRep, MixingBlockIsNotRestrictable) {
    auto mp = fx::mp_a();
    auto lr = induced_bicross_rep(adjoint_representation(mp));
    lr.action(0, 0, 1) = 1;  // x sends v into w
    try {
        extract_rep_from_bicross(mp, lr, 1, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotRestrictable);
    }
}

TEST(MPRep, DualIsInvolutiveAndMatchesCoadjoint) {
    for (const auto& mp : fx::small_matched_pairs()) {
        auto ad = adjoint_representation(mp);
        auto d = dual_representation(ad);
        EXPECT_TRUE(validate_mp_representation(d).valid());
        EXPECT_TRUE(d == coadjoint_representation(mp));
        EXPECT_TRUE(dual_representation(d) == ad);
    }
    std::mt19937 rng(71);
    for (int t = 0; t < 20; ++t) {
        auto r = random_rep_candidate(rng, fx::mp_a(), 2, 1, 50);
        EXPECT_TRUE(dual_representation(dual_representation(r)) == r);
        EXPECT_EQ(validate_mp_representation(r).valid(), validate_mp_representation(dual_representation(r)).valid());
    }
}

TEST(MPRep, CoadjointOfMpA) {
    auto c = coadjoint_representation(fx::mp_a());
    EXPECT_EQ(c.alpha(0, 0, 0), Q(-1));
    EXPECT_TRUE(c.beta.is_zero());
}

TEST(MPRep, SemidirectOfAdjointIsValid) {
    for (const auto& mp : fx::small_matched_pairs()) {
        auto sd = semidirect_product(adjoint_representation(mp));
        EXPECT_EQ(sd.m(), 2 * mp.m());
        EXPECT_TRUE(validate_matched_pair(sd).valid());
    }
    auto bad = adjoint_representation(fx::mp_a());
    bad.rho_W = bad.rho_W.scaled(Q(2));
    EXPECT_THROW(semidirect_product(bad), Error);
}
