#pragma once

#include <random>
#include <string>
#include <vector>

#include "mpla/lie.hpp"
#include "mpla/linalg.hpp"

namespace fx {

using mpla::LieAlgebra;
using mpla::Matrix;
using mpla::Rational;
using Q = Rational;

inline Q rand_q(std::mt19937& rng, int lo = -2, int hi = 2, bool fractions = false) {
    std::uniform_int_distribution<int> d(lo, hi);
    if (!fractions) return Q(d(rng));
    std::uniform_int_distribution<int> den(1, 3);
    Q r(d(rng), den(rng));
    r.canonicalize();
    return r;
}

// mostly zero entries keep structure sparse
inline Q rand_sparse(std::mt19937& rng, int density_pct = 40) {
    std::uniform_int_distribution<int> p(0, 99);
    if (p(rng) >= density_pct) return Q(0);
    return rand_q(rng);
}

inline Matrix<Q> random_matrix(std::mt19937& rng, int r, int c) {
    Matrix<Q> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rand_q(rng);
    return m;
}

inline Matrix<Q> random_invertible(std::mt19937& rng, int n) {
    while (true) {
        Matrix<Q> m = random_matrix(rng, n, n);
        if (mpla::rank(m) == static_cast<std::size_t>(n)) return m;
    }
}

// structure constants carried along a change of basis e'_i = sum_k P(k,i) e_k
inline LieAlgebra<Q> transport(const LieAlgebra<Q>& g, const Matrix<Q>& p) {
    const int n = g.dim();
    Matrix<Q> pinv = mpla::inverse(p);
    LieAlgebra<Q> h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto b = pinv.apply(g.bracket(p.column(i), p.column(j)));
            for (int k = 0; k < n; ++k) h.set_bracket(i, j, k, b[k]);
        }
    return h;
}

inline LieAlgebra<Q> aff1() {
    LieAlgebra<Q> g(2);
    g.set_bracket(0, 1, 1, Q(1));
    return g;
}

inline LieAlgebra<Q> sl2() {
    // e, f, h
    LieAlgebra<Q> g(3);
    g.set_bracket(0, 1, 2, Q(1));
    g.set_bracket(2, 0, 0, Q(2));
    g.set_bracket(2, 1, 1, Q(-2));
    return g;
}

inline LieAlgebra<Q> heisenberg() {
    LieAlgebra<Q> g(3);
    g.set_bracket(0, 1, 2, Q(1));
    return g;
}

inline LieAlgebra<Q> so3() {
    LieAlgebra<Q> g(3);
    g.set_bracket(0, 1, 2, Q(1));
    g.set_bracket(1, 2, 0, Q(1));
    g.set_bracket(2, 0, 1, Q(1));
    return g;
}

inline std::vector<LieAlgebra<Q>> small_lie_algebras() {
    return {LieAlgebra<Q>::abelian(1), LieAlgebra<Q>::abelian(2), aff1(), heisenberg(), sl2(), so3()};
}

inline mpla::SkewMultiMap<Q> random_map(std::mt19937& rng, int arity, int dom, int cod, int density = 60) {
    mpla::SkewMultiMap<Q> f(arity, dom, cod);
    for (auto& c : f.coefficients()) c = rand_sparse(rng, density);
    return f;
}

} // namespace fx

#include "mpla/matched_pair.hpp"

namespace fx {

using mpla::MatchedPair;
using mpla::Tensor3;

// g = span{x}, h = span{h}, ρ_x h = h, ψ = 0; bicrossed product is aff(1)
inline MatchedPair<Q> mp_a() {
    MatchedPair<Q> mp(LieAlgebra<Q>::abelian(1), LieAlgebra<Q>::abelian(1));
    mp.rho(0, 0, 0) = 1;
    return mp;
}

inline MatchedPair<Q> mp_trivial(int m, int n) {
    return MatchedPair<Q>(LieAlgebra<Q>::abelian(m), LieAlgebra<Q>::abelian(n));
}

// (g, V, ρ, 0) with V abelian
inline MatchedPair<Q> mp_from_rep(const mpla::LieRep<Q>& r) {
    MatchedPair<Q> mp(r.algebra, LieAlgebra<Q>::abelian(r.space_dim));
    mp.rho = r.action;
    return mp;
}

// (V, h, 0, ψ) with V abelian
inline MatchedPair<Q> mp_from_rep_mirror(const mpla::LieRep<Q>& r) {
    MatchedPair<Q> mp(LieAlgebra<Q>::abelian(r.space_dim), r.algebra);
    mp.psi = r.action;
    return mp;
}

// structure pulled back along (P, Q) so that (P, Q) : result -> mp is a morphism
inline MatchedPair<Q> transport_mp(const MatchedPair<Q>& mp, const Matrix<Q>& p, const Matrix<Q>& q) {
    const int m = mp.m(), n = mp.n();
    Matrix<Q> pi = mpla::inverse(p), qi = mpla::inverse(q);
    MatchedPair<Q> out(transport(mp.g, p), transport(mp.h, q));
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            auto r = qi.apply(mp.rho_act(p.column(i), q.column(a)));
            for (int b = 0; b < n; ++b) out.rho(i, a, b) = r[b];
            auto s = pi.apply(mp.psi_act(q.column(a), p.column(i)));
            for (int j = 0; j < m; ++j) out.psi(a, i, j) = s[j];
        }
    return out;
}

inline mpla::LieBialgebra bialg_aff1_nontrivial() {
    Tensor3<Q> d(2, 2, 2);
    d(1, 0, 1) = 1;
    d(1, 1, 0) = -1;
    return mpla::LieBialgebra(aff1(), d);
}

inline mpla::LieBialgebra bialg_zero(const LieAlgebra<Q>& g) { return mpla::LieBialgebra(g, Tensor3<Q>(g.dim(), g.dim(), g.dim())); }

// abelian g whose dual algebra is aff(1)
inline mpla::LieBialgebra bialg_abelian_dual_aff1() {
    Tensor3<Q> d(2, 2, 2);
    d(1, 0, 1) = 1;
    d(1, 1, 0) = -1;
    return mpla::LieBialgebra(LieAlgebra<Q>::abelian(2), d);
}

inline Matrix<Q> scalar_matrix(int n, const Q& c) {
    Matrix<Q> m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

// valid matched pairs with dim g, dim h <= 2
inline std::vector<MatchedPair<Q>> small_matched_pairs() {
    std::vector<MatchedPair<Q>> v;
    v.push_back(mp_a());
    v.push_back(mp_trivial(1, 1));
    v.push_back(mp_trivial(2, 1));
    v.push_back(mp_from_rep(mpla::adjoint_rep(aff1())));
    v.push_back(mp_from_rep_mirror(mpla::adjoint_rep(aff1())));
    v.push_back(mpla::bialgebra_to_matched_pair(bialg_aff1_nontrivial()));
    v.push_back(mpla::bialgebra_to_matched_pair(bialg_zero(aff1())));
    v.push_back(mpla::bialgebra_to_matched_pair(bialg_abelian_dual_aff1()));
    v.push_back(mpla::rota_baxter_matched_pair(aff1(), Matrix<Q>(2, 2)).pair);
    v.push_back(mpla::rota_baxter_matched_pair(aff1(), scalar_matrix(2, Q(-1))).pair);
    {
        // one-dimensional pair with both actions the identity
        MatchedPair<Q> mp(LieAlgebra<Q>::abelian(1), LieAlgebra<Q>::abelian(1));
        mp.rho(0, 0, 0) = 1;
        mp.psi(0, 0, 0) = 1;
        v.push_back(mp);
    }
    {
        // aff(1) acting on a line through its character
        mpla::LieRep<Q> r(aff1(), 1);
        r.action(0, 0, 0) = 2;
        v.push_back(mp_from_rep(r));
    }
    return v;
}

} // namespace fx
