#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mpla/bigraded.hpp"

using namespace mpla;
using fx::Q;

namespace {

BidegreeMap<Q> random_bidegree(std::mt19937& rng, int m, int n, int k, int l) {
    BidegreeMap<Q> b(m, n, k, l, m, n);
    for (auto& c : b.part_g.coefficients()) c = fx::rand_sparse(rng, 50);
    for (auto& c : b.part_h.coefficients()) c = fx::rand_sparse(rng, 50);
    return b;
}

} // namespace

TEST(Bigraded, EmbedDecomposeRoundTrip) {
    std::mt19937 rng(31);
    for (int N = 1; N <= 3; ++N) {
        auto f = fx::random_map(rng, N, 4, 4);
        auto d = decompose(f, 2, 2, 2, 2);
        ASSERT_EQ(d.components.size(), static_cast<std::size_t>(N + 2));
        SkewMultiMap<Q> sum(N, 4, 4);
        for (const auto& c : d.components) {
            EXPECT_EQ(c.k + c.l, N - 1);
            sum += embed(c);
        }
        EXPECT_EQ(sum, f);
    }
}

TEST(Bigraded, SlotCountsOfComponents) {
    // g-valued pieces with p g-slots sit in bidegree (p-1 | N-p)
    BidegreeMap<Q> b(2, 2, 1, 0, 2, 2);
    EXPECT_EQ(b.part_g.g_arity(), 2);
    EXPECT_EQ(b.part_g.h_arity(), 0);
    EXPECT_EQ(b.part_h.g_arity(), 1);
    EXPECT_EQ(b.part_h.h_arity(), 1);
    BidegreeMap<Q> top(2, 2, 2, -1, 2, 2);  // Hom(Λ²g, h)
    EXPECT_EQ(top.part_g.size(), 0u);
    EXPECT_EQ(top.part_h.size(), 2u);
}

TEST(Bigraded, BracketIsAdditiveInBidegree) {
    std::mt19937 rng(37);
    const int m = 2, n = 2;
    for (int k1 = -1; k1 <= 1; ++k1)
        for (int l1 = -1; l1 <= 1; ++l1)
            for (int k2 = -1; k2 <= 1; ++k2)
                for (int l2 = -1; l2 <= 1; ++l2) {
                    if (k1 + l1 < 0 || k2 + l2 < 0) continue;
                    auto a = random_bidegree(rng, m, n, k1, l1);
                    auto b = random_bidegree(rng, m, n, k2, l2);
                    auto br = nr_bracket(embed(a), embed(b));
                    if (br.arity() > m + n) continue;
                    auto d = decompose(br, m, n, m, n);
                    for (const auto& c : d.components)
                        if (c.k != k1 + k2) {
                            EXPECT_TRUE(c.is_zero()) << k1 << l1 << k2 << l2 << " leaked into k=" << c.k;
                        }
                }
}

TEST(Bigraded, MIsClosedUnderBracket) {
    std::mt19937 rng(41);
    for (int t = 0; t < 20; ++t) {
        int k1 = t % 3, l1 = (t / 3) % 2, k2 = (t / 2) % 2, l2 = t % 2;
        auto a = random_bidegree(rng, 2, 2, k1, l1);
        auto b = random_bidegree(rng, 2, 2, k2, l2);
        auto d = decompose(nr_bracket(embed(a), embed(b)), 2, 2, 2, 2);
        EXPECT_TRUE(d.in_M);
    }
}

TEST(Bigraded, StructureElementOfMpA) {
    auto mp = fx::mp_a();
    auto pi = mp.structure_element();
    // (μ⋉ρ)((x,0),(0,h)) = (0, ρ_x h) = (0, h)
    std::vector<int> args{0, 1};
    EXPECT_EQ(embed(pi.mu_rho).eval(args), (std::vector<Q>{Q(0), Q(1)}));
    EXPECT_TRUE(pi.psi_nu.is_zero());
    auto mc = mc_check(pi);
    EXPECT_TRUE(mc.is_mc());
    // total structure equals the bicrossed bracket
    EXPECT_EQ(pi.total(), bicrossed_bracket(mp).as_map());
}

TEST(Bigraded, StructureTotalIsBicrossedBracketOnFixtures) {
    for (const auto& mp : fx::small_matched_pairs())
        EXPECT_EQ(mp.structure_element().total(), bicrossed_bracket(mp).as_map());
}
