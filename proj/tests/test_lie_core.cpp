#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "mpla/lie.hpp"

using namespace mpla;
using fx::Q;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// i_f g summed over the full symmetric group, divided by a!(b-1)!
SkewMultiMap<Q> oracle_insertion(const SkewMultiMap<Q>& f, const SkewMultiMap<Q>& g) {
    const int d = f.domain_dim(), a = f.arity(), b = g.arity();
    const int n = a + b - 1;
    SkewMultiMap<Q> out(n, d, d);
    if (b == 0) return out;
    for (const auto& x : subsets(d, n)) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Q> acc(d, Q(0));
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
            std::vector<int> fa(a), ga(b);
            for (int i = 0; i < a; ++i) fa[i] = x[perm[i]];
            auto fv = f.eval(fa);
            for (int c = 0; c < d; ++c) {
                if (fv[c] == 0) continue;
                ga[0] = c;
                for (int i = 1; i < b; ++i) ga[i] = x[perm[a + i - 1]];
                g.accumulate(ga, inv % 2 ? Q(-fv[c]) : fv[c], acc);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        Q norm(factorial(a) * factorial(b - 1));
        for (int o = 0; o < d; ++o) out.at(x, o) = acc[o] / norm;
    }
    return out;
}

} // namespace

TEST(LieAlgebra, SkewCompletionAndEvaluation) {
    LieAlgebra<Q> g = fx::aff1();
    EXPECT_EQ(g.c(1, 0, 1), Q(-1));
    auto f = g.as_map();
    std::vector<int> rev{1, 0};
    EXPECT_EQ(f.eval(rev), (std::vector<Q>{Q(0), Q(-1)}));
    EXPECT_EQ(LieAlgebra<Q>::from_map(f), g);
    Tensor3<Q> bad(2, 2, 2);
    bad(0, 1, 0) = 1;
    EXPECT_THROW(LieAlgebra<Q>::from_tensor(bad), Error);
    EXPECT_THROW(g.set_bracket(0, 0, 1, Q(1)), Error);
}

TEST(LieAlgebra, JacobiFailureWitness) {
    // [e1,e2]=e3, [e1,e3]=e1 (1-based); cyclic sum at (e1,e2,e3) is -e3
    LieAlgebra<Q> g(3);
    g.set_bracket(0, 1, 2, Q(1));
    g.set_bracket(0, 2, 0, Q(1));
    auto rep = validate_lie_algebra(g);
    EXPECT_FALSE(rep.valid());
    ASSERT_EQ(rep.checks[0].witnesses.size(), 1u);
    EXPECT_EQ(rep.checks[0].witnesses[0].where, "(i=0,j=1,k=2)");
    EXPECT_EQ(rep.checks[0].witnesses[0].residual, "(0,0,-1)");
}

TEST(LieAlgebra, FixturesSatisfyJacobi) {
    for (const auto& g : fx::small_lie_algebras()) EXPECT_TRUE(validate_lie_algebra(g).valid());
    std::mt19937 rng(2);
    for (int t = 0; t < 10; ++t) {
        auto g = fx::transport(fx::sl2(), fx::random_invertible(rng, 3));
        EXPECT_TRUE(validate_lie_algebra(g).valid());
    }
}

TEST(LieAlgebra, NrSquareVanishesIffJacobi) {
    std::mt19937 rng(7);
    int invalid_seen = 0;
    for (int t = 0; t < 40; ++t) {
        LieAlgebra<Q> g(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int k = 0; k < 3; ++k) g.set_bracket(i, j, k, fx::rand_sparse(rng, 30));
        auto mu = g.as_map();
        bool jac = validate_lie_algebra(g).valid();
        invalid_seen += !jac;
        EXPECT_EQ(nr_bracket(mu, mu).is_zero(), jac);
    }
    EXPECT_GT(invalid_seen, 0);
}

TEST(NrBracket, InsertionMatchesFullPermutationSum) {
    std::mt19937 rng(13);
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            auto f = fx::random_map(rng, a, 4, 4);
            auto g = fx::random_map(rng, b, 4, 4);
            EXPECT_EQ(insertion(f, g), oracle_insertion(f, g)) << a << "," << b;
        }
}

TEST(NrBracket, GradedSkewSymmetryAndJacobi) {
    std::mt19937 rng(17);
    for (int t = 0; t < 12; ++t) {
        int a = 1 + t % 3, b = 1 + (t / 3) % 3, c = 1 + (t / 2) % 2;
        auto f = fx::random_map(rng, a, 3, 3, 50);
        auto g = fx::random_map(rng, b, 3, 3, 50);
        auto h = fx::random_map(rng, c, 3, 3, 50);
        long m = a - 1, n = b - 1, p = c - 1;
        auto fg = nr_bracket(f, g), gf = nr_bracket(g, f);
        EXPECT_EQ(fg, Q(-parity_sign(m * n)) * gf);
        // [f,[g,h]] = [[f,g],h] + (-1)^{mn} [g,[f,h]]
        auto lhs = nr_bracket(f, nr_bracket(g, h));
        auto rhs = nr_bracket(fg, h) + Q(parity_sign(m * n)) * nr_bracket(g, nr_bracket(f, h));
        EXPECT_EQ(lhs, rhs);
        (void)p;
    }
}

TEST(NrBracket, IdentityActsAsArity) {
    auto g = fx::sl2();
    SkewMultiMap<Q> id(1, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(std::vector<int>{i}, i) = 1;
    auto mu = g.as_map();
    EXPECT_EQ(nr_bracket(id, mu), mu);
}

TEST(ChevalleyEilenberg, AdjointCoboundaryIsMinusNrWithBracket) {
    std::mt19937 rng(19);
    for (const auto& g : fx::small_lie_algebras()) {
        auto ad = adjoint_rep(g);
        for (int n = 0; n <= 2; ++n) {
            auto f = fx::random_map(rng, n, g.dim(), g.dim());
            EXPECT_EQ(ce_coboundary(ad, f), -nr_bracket(g.as_map(), f));
        }
    }
}

TEST(ChevalleyEilenberg, SquareZeroOnRepresentations) {
    std::mt19937 rng(23);
    for (const auto& g : fx::small_lie_algebras()) {
        std::vector<LieRep<Q>> reps{adjoint_rep(g), trivial_rep(g, 2), wedge_adjoint_rep(g, 2)};
        for (const auto& r : reps) {
            ASSERT_TRUE(validate_lie_rep(r).valid());
            for (int n = 0; n <= 2; ++n) {
                auto d0 = ce_matrix(r, n), d1 = ce_matrix(r, n + 1);
                EXPECT_TRUE((d1 * d0).is_zero());
            }
        }
    }
}

TEST(ChevalleyEilenberg, KnownCohomology) {
    // aff(1) with trivial coefficients: H^0=1, H^1=1, H^2=0
    auto dims = ce_cohomology_dims(trivial_rep(fx::aff1(), 1), 2);
    EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 0}));
    // sl2 adjoint: all vanish in degrees 0..3 (Whitehead)
    auto s = ce_cohomology_dims(adjoint_rep(fx::sl2()), 3);
    EXPECT_EQ(s, (std::vector<std::size_t>{0, 0, 0, 0}));
    // abelian 2-dim, trivial 1-dim: exterior algebra 1,2,1
    auto a = ce_cohomology_dims(trivial_rep(LieAlgebra<Q>::abelian(2), 1), 2);
    EXPECT_EQ(a, (std::vector<std::size_t>{1, 2, 1}));
}

TEST(ChevalleyEilenberg, RepresentationLawFailureIsReported) {
    auto g = fx::aff1();
    LieRep<Q> r(g, 1);
    r.action(1, 0, 0) = 1;  // e1 acts by 1 but [e0,e1]=e1 needs rho(e1)=0 on a line
    auto rep = validate_lie_rep(r);
    EXPECT_FALSE(rep.valid());
}
