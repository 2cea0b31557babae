#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mpla/mp_cohomology.hpp"

using namespace mpla;
using fx::Q;

namespace {

MPCochain<Q> random_cochain(std::mt19937& rng, const MPRepresentation<Q>& r, int degree, int density = 40) {
    auto c = MPCochain<Q>::zero(r.m(), r.n(), r.p, r.q, degree);
    for (auto& pc : c.pieces) {
        for (auto& x : pc.V.coefficients()) x = fx::rand_sparse(rng, density);
        for (auto& x : pc.W.coefficients()) x = fx::rand_sparse(rng, density);
    }
    return c;
}

std::vector<MPRepresentation<Q>> small_reps() {
    std::vector<MPRepresentation<Q>> out;
    for (const auto& mp : fx::small_matched_pairs()) {
        if (mp.m() + mp.n() > 4) continue;
        out.push_back(adjoint_representation(mp));
        out.push_back(coadjoint_representation(mp));
    }
    return out;
}

} // namespace

TEST(MPCochain, DimensionsAndRoundTrips) {
    std::mt19937 rng(101);
    auto r = adjoint_representation(fx::mp_a());
    EXPECT_EQ(cochain_space_dim(1, 1, 1, 1, 0), 2u);
    EXPECT_EQ(cochain_space_dim(1, 1, 1, 1, 1), 2u);
    EXPECT_EQ(cochain_space_dim(1, 1, 1, 1, 2), 2u);
    EXPECT_EQ(cochain_space_dim(1, 1, 1, 1, 3), 0u);
    for (int d = 0; d <= 3; ++d) {
        auto c = random_cochain(rng, r, d);
        EXPECT_EQ(c.dim(), cochain_space_dim(1, 1, 1, 1, d));
        EXPECT_EQ(MPCochain<Q>::unflatten(1, 1, 1, 1, d, c.flatten()), c);
        bool clean = false;
        EXPECT_EQ(MPCochain<Q>::from_sum_map(c.to_sum_map(), 1, 1, 1, 1, &clean), c);
        EXPECT_TRUE(clean);
    }
    // Φ is injective
    for (int d = 0; d <= 3; ++d)
        EXPECT_EQ(rank(phi_matrix(2, 1, 2, 3, d)), cochain_space_dim(2, 1, 2, 3, d));
    EXPECT_THROW(cochain_space_dim(1, 1, 1, 1, -1), Error);
}

TEST(MPCochain, SumMapOutsideSpaceIsNotClean) {
    // a map g -> h is bidegree (1|-1) for the V-part, outside the cochain space in degree 1
    SkewMultiMap<Q> f(1, 2, 2);
    f.coeff(0, 1) = 1;
    bool clean = true;
    auto c = MPCochain<Q>::from_sum_map(f, 1, 1, 1, 1, &clean);
    EXPECT_FALSE(clean);
    EXPECT_TRUE(c.is_zero());
}

TEST(MPCoboundary, CoefficientRouteMatchesBracketRouteOnAdjoint) {
    std::mt19937 rng(103);
    for (const auto& mp : fx::small_matched_pairs()) {
        auto r = adjoint_representation(mp);
        const int top = mp.m() + mp.n() > 4 ? 2 : 3;
        for (int d = 1; d <= top; ++d)
            for (int t = 0; t < 3; ++t) {
                auto F = random_cochain(rng, r, d);
                EXPECT_EQ(delta_mpl_coeff(r, F), delta_mpl_adjoint(mp, F)) << "degree " << d;
            }
    }
}

TEST(MPCoboundary, CoefficientRouteIsRestrictedBicrossedCoboundary) {
    std::mt19937 rng(107);
    for (const auto& r : small_reps())
        for (int d = 1; d <= 3; ++d)
            for (int t = 0; t < 3; ++t) {
                auto F = random_cochain(rng, r, d);
                bool clean = false;
                auto viaCE = delta_via_bicross(r, F, &clean);
                EXPECT_TRUE(clean);
                EXPECT_EQ(delta_mpl_coeff(r, F), viaCE);
                EXPECT_TRUE(phi_chain_check(r, F));
            }
}

TEST(MPCoboundary, PrintedMixedSignsBreakTheComplex) {
    // the mixed ρ/ψ insertion terms need the corrected signs; the printed ones miss δ_CE somewhere
    std::mt19937 rng(109);
    bool differs = false;
    for (const auto& r : small_reps())
        for (int d = 1; d <= 2; ++d) {
            auto F = random_cochain(rng, r, d, 80);
            if (!(delta_mpl_coeff(r, F, SignConvention::AsPrinted) == delta_mpl_coeff(r, F))) differs = true;
        }
    EXPECT_TRUE(differs);
}

TEST(MPCoboundary, SquaresToZero) {
    std::mt19937 rng(113);
    for (const auto& r : small_reps()) {
        for (int d = 1; d <= 2; ++d) {
            auto F = random_cochain(rng, r, d);
            EXPECT_TRUE(delta_mpl_coeff(r, delta_mpl_coeff(r, F)).is_zero());
        }
        auto K = admissible_degree0_basis(r);
        for (std::size_t j = 0; j < K.cols(); ++j) {
            auto F = MPCochain<Q>::unflatten(r.m(), r.n(), r.p, r.q, 0, K.column(j));
            EXPECT_TRUE(delta_mpl_coeff(r, delta_mpl_coeff(r, F)).is_zero());
            EXPECT_TRUE(phi_chain_check(r, F));
        }
    }
}

TEST(MPCoboundary, DegreeZeroOutsideAdmissibleSubspace) {
    auto mp = fx::mp_a();
    auto r = adjoint_representation(mp);
    // x = (1,0): the whole coboundary sends (0,h) to [h,x] = (0,-h)
    auto x = MPCochain<Q>::zero(1, 1, 1, 1, 0);
    x.pieces[0].V.coefficients()[0] = 1;
    auto full = degree0_full(r, x);
    EXPECT_EQ(full.eval(std::vector<int>{1}), (std::vector<Q>{Q(0), Q(-1)}));
    EXPECT_TRUE(phi_chain_check(r, x));
    EXPECT_EQ(admissible_degree0_basis(r).cols(), 1u);  // ρ_x h = h rules out (0,h)
    // with ρ = ψ = 1 on two lines, [h,x] = (x,-h) has a V-component on h, so (x,0) is not admissible
    MatchedPair<Q> one{LieAlgebra<Q>::abelian(1), LieAlgebra<Q>::abelian(1)};
    one.rho(0, 0, 0) = 1;
    one.psi(0, 0, 0) = 1;
    auto r1 = adjoint_representation(one);
    EXPECT_EQ(degree0_full(r1, x).eval(std::vector<int>{1}), (std::vector<Q>{Q(1), Q(-1)}));
    EXPECT_FALSE(phi_chain_check(r1, x));
    EXPECT_EQ(admissible_degree0_basis(r1).cols(), 0u);
    // (0,p) on (x,0) gives (-β_p x, ρ_W(x) p)
    auto w = MPCochain<Q>::zero(1, 1, 1, 1, 0);
    w.pieces[0].W.coefficients()[0] = 1;
    auto fw = degree0_full(r, w).eval(std::vector<int>{0});
    EXPECT_EQ(fw[0], -r.beta(0, 0, 0));
    EXPECT_EQ(fw[1], r.rho_W(0, 0, 0));
    // the projection keeps only the C^1 components
    auto d = delta_mpl_coeff(r, w);
    EXPECT_EQ(d.piece(1).V.coefficients()[0], -r.beta(0, 0, 0));
    EXPECT_EQ(d.piece(1).W.coefficients()[0], r.psi_W(0, 0, 0));
}

TEST(MPCohomology, TrivialPairOfLines) {
    auto dims = mpl_cohomology_dims(fx::mp_trivial(1, 1), 3);
    std::vector<std::size_t> h, c;
    for (const auto& d : dims) h.push_back(d.h_dim), c.push_back(d.cochain_dim);
    EXPECT_EQ(h, (std::vector<std::size_t>{2, 2, 2, 0}));
    EXPECT_EQ(c, (std::vector<std::size_t>{2, 2, 2, 0}));
}

TEST(MPCohomology, MatricesComposeToZeroAndRoutesAgree) {
    for (const auto& mp : fx::small_matched_pairs()) {
        if (mp.m() + mp.n() > 4) continue;
        auto r = adjoint_representation(mp);
        auto K = admissible_degree0_basis(r);
        auto d0 = coboundary_matrix(r, 0);
        auto d1 = coboundary_matrix(r, 1);
        auto d2 = coboundary_matrix(r, 2);
        EXPECT_TRUE((d1 * (d0 * K)).is_zero());
        EXPECT_TRUE((d2 * d1).is_zero());
        EXPECT_EQ(d1, coboundary_matrix(r, 1, Route::Adjoint));
        EXPECT_EQ(d2, coboundary_matrix(r, 2, Route::Adjoint));
        EXPECT_NO_THROW(mpl_cohomology_dims(r, 3));
    }
}

TEST(MPCohomology, ChainMapIntoBicrossedComplex) {
    for (const auto& r : small_reps()) {
        auto lr = induced_bicross_rep(r);
        for (int d = 1; d <= 2; ++d) {
            auto lhs = phi_matrix(r.m(), r.n(), r.p, r.q, d + 1) * coboundary_matrix(r, d);
            auto rhs = ce_matrix(lr, d) * phi_matrix(r.m(), r.n(), r.p, r.q, d);
            EXPECT_EQ(lhs, rhs);
        }
        auto K = admissible_degree0_basis(r);
        EXPECT_EQ(phi_matrix(r.m(), r.n(), r.p, r.q, 1) * (coboundary_matrix(r, 0) * K),
                  ce_matrix(lr, 0) * (phi_matrix(r.m(), r.n(), r.p, r.q, 0) * K));
    }
}

TEST(LieBi, ComplexSquaresToZero) {
    std::mt19937 rng(127);
    for (const auto& b : {fx::bialg_aff1_nontrivial(), fx::bialg_zero(fx::aff1()), fx::bialg_abelian_dual_aff1(),
                          fx::bialg_zero(fx::heisenberg())})
        for (int d = 1; d <= 2; ++d) {
            auto xi = LieBiCochain::zero(b.g.dim(), d);
            for (auto& f : xi.xi)
                for (auto& c : f.coefficients()) c = fx::rand_sparse(rng, 60);
            EXPECT_TRUE(liebi_coboundary(b, liebi_coboundary(b, xi)).is_zero()) << d;
        }
}

TEST(LieBi, PsiIsAChainMap) {
    std::mt19937 rng(131);
    for (const auto& b : {fx::bialg_aff1_nontrivial(), fx::bialg_zero(fx::aff1()), fx::bialg_abelian_dual_aff1(),
                          fx::bialg_zero(fx::heisenberg())})
        for (int d = 1; d <= 3; ++d) {
            auto xi = LieBiCochain::zero(b.g.dim(), d);
            for (auto& f : xi.xi)
                for (auto& c : f.coefficients()) c = fx::rand_sparse(rng, 60);
            EXPECT_TRUE(psi_compare(b, xi)) << "degree " << d;
        }
}
