#pragma once

#include <string>
#include <vector>

#include "bigraded.hpp"
#include "errors.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "validation.hpp"

namespace mpla {

// rho(i,a,b): e_i . f_a has f_b-coefficient; psi(a,i,j): f_a . e_i has e_j-coefficient
template <class S>
struct MatchedPair {
    LieAlgebra<S> g;
    LieAlgebra<S> h;
    Tensor3<S> rho;
    Tensor3<S> psi;

    MatchedPair() = default;
    MatchedPair(LieAlgebra<S> g_, LieAlgebra<S> h_)
        : g(std::move(g_)), h(std::move(h_)), rho(g.dim(), h.dim(), h.dim()), psi(h.dim(), g.dim(), g.dim()) {}
    MatchedPair(LieAlgebra<S> g_, LieAlgebra<S> h_, Tensor3<S> rho_, Tensor3<S> psi_)
        : g(std::move(g_)), h(std::move(h_)), rho(std::move(rho_)), psi(std::move(psi_)) {
        check_shapes();
    }

    int m() const { return g.dim(); }
    int n() const { return h.dim(); }

    void check_shapes() const {
        if (!rho.same_shape(m(), n(), n())) fail(ErrorKind::MalformedTensor, "rho must be dim g x dim h x dim h");
        if (!psi.same_shape(n(), m(), m())) fail(ErrorKind::MalformedTensor, "psi must be dim h x dim g x dim g");
    }

    std::vector<S> rho_act(const std::vector<S>& x, const std::vector<S>& hv) const { return rho.apply2(x, hv); }
    std::vector<S> psi_act(const std::vector<S>& hv, const std::vector<S>& x) const { return psi.apply2(hv, x); }

    StructureElement<S> structure_element() const {
        return StructureElement<S>::from_tensors(g.structure(), h.structure(), rho, psi);
    }

    template <class F>
    MatchedPair<F> convert() const {
        return MatchedPair<F>(g.template convert<F>(), h.template convert<F>(), rho.template convert<F>(),
                              psi.template convert<F>());
    }

    friend bool operator==(const MatchedPair& a, const MatchedPair& b) {
        return a.g == b.g && a.h == b.h && a.rho == b.rho && a.psi == b.psi;
    }
};

namespace detail {

template <class S>
std::vector<S> slice(const std::vector<S>& v, int from, int len) {
    return std::vector<S>(v.begin() + from, v.begin() + from + len);
}

template <class S>
std::vector<S> concat(const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

} // namespace detail

// ρ_x[h,k] = [ρ_x h,k] + [h,ρ_x k] + ρ_{ψ_k x}h - ρ_{ψ_h x}k
template <class S>
CheckResult compat_rho_check(const MatchedPair<S>& mp) {
    CheckResult r;
    r.name = "rho compatibility";
    r.label = "Eq. (11)";
    const int m = mp.m(), n = mp.n();
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                ++r.evaluated;
                auto x = unit_vector<S>(m, i), ha = unit_vector<S>(n, a), hb = unit_vector<S>(n, b);
                auto lhs = mp.rho_act(x, mp.h.bracket_basis(a, b));
                auto rhs = mp.h.bracket(mp.rho_act(x, ha), hb) + mp.h.bracket(ha, mp.rho_act(x, hb)) +
                           mp.rho_act(mp.psi_act(hb, x), ha) - mp.rho_act(mp.psi_act(ha, x), hb);
                auto res = lhs - rhs;
                if (!all_zero(res)) r.record(idx_str({{"i", i}, {"a", a}, {"b", b}}), vec_to_string(res));
            }
    return r;
}

// ψ_h[x,y] = [ψ_h x,y] + [x,ψ_h y] + ψ_{ρ_y h}x - ψ_{ρ_x h}y
template <class S>
CheckResult compat_psi_check(const MatchedPair<S>& mp) {
    CheckResult r;
    r.name = "psi compatibility";
    r.label = "Eq. (22)";
    const int m = mp.m(), n = mp.n();
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                ++r.evaluated;
                auto hv = unit_vector<S>(n, a), x = unit_vector<S>(m, i), y = unit_vector<S>(m, j);
                auto lhs = mp.psi_act(hv, mp.g.bracket_basis(i, j));
                auto rhs = mp.g.bracket(mp.psi_act(hv, x), y) + mp.g.bracket(x, mp.psi_act(hv, y)) +
                           mp.psi_act(mp.rho_act(y, hv), x) - mp.psi_act(mp.rho_act(x, hv), y);
                auto res = lhs - rhs;
                if (!all_zero(res)) r.record(idx_str({{"a", a}, {"i", i}, {"j", j}}), vec_to_string(res));
            }
    return r;
}

template <class S>
ValidationReport validate_matched_pair(const MatchedPair<S>& mp) {
    mp.check_shapes();
    ValidationReport rep;
    rep.subject = "matched pair";
    rep.checks.push_back(jacobi_check(mp.g, "Jacobi on g"));
    rep.checks.push_back(jacobi_check(mp.h, "Jacobi on h"));
    rep.checks.push_back(rep_law_check(mp.g, mp.rho, "rho is a representation"));
    rep.checks.push_back(rep_law_check(mp.h, mp.psi, "psi is a representation"));
    rep.checks.push_back(compat_rho_check(mp));
    rep.checks.push_back(compat_psi_check(mp));
    return rep;
}

// bracket on g⊕h (g basis first) built from the structure maps, without validation
template <class S>
LieAlgebra<S> bicrossed_bracket(const MatchedPair<S>& mp) {
    const int m = mp.m(), n = mp.n();
    LieAlgebra<S> d(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k) d.set_bracket(i, j, k, mp.g.c(i, j, k));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) d.set_bracket(m + a, m + b, m + c, mp.h.c(a, b, c));
    // [(e_i,0),(0,f_a)] = (-ψ_{f_a} e_i, ρ_{e_i} f_a)
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            for (int j = 0; j < m; ++j) d.set_bracket(i, m + a, j, S(-mp.psi(a, i, j)));
            for (int b = 0; b < n; ++b) d.set_bracket(i, m + a, m + b, mp.rho(i, a, b));
        }
    return d;
}

template <class S>
LieAlgebra<S> bicrossed_product(const MatchedPair<S>& mp) {
    auto rep = validate_matched_pair(mp);
    if (!rep.valid()) fail(ErrorKind::InvalidInput, "not a matched pair:\n" + rep.to_text());
    return bicrossed_bracket(mp);
}

template <class S>
struct MPMorphism {
    Matrix<S> f;  // g -> g'
    Matrix<S> g;  // h -> h'
};

// f, g Lie morphisms intertwining both actions; the direct sum is then a bicrossed morphism
template <class S>
ValidationReport check_morphism(const MatchedPair<S>& src, const MatchedPair<S>& dst, const MPMorphism<S>& phi) {
    const int m = src.m(), n = src.n(), m2 = dst.m(), n2 = dst.n();
    if (phi.f.rows() != static_cast<std::size_t>(m2) || phi.f.cols() != static_cast<std::size_t>(m) ||
        phi.g.rows() != static_cast<std::size_t>(n2) || phi.g.cols() != static_cast<std::size_t>(n))
        fail(ErrorKind::DimensionMismatch, "morphism matrices do not match the matched pairs");
    ValidationReport rep;
    rep.subject = "matched pair morphism";
    CheckResult fh{"f preserves brackets", "", 0, 0, {}}, gh{"g preserves brackets", "", 0, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            ++fh.evaluated;
            auto res = phi.f.apply(src.g.bracket_basis(i, j)) - dst.g.bracket(phi.f.column(i), phi.f.column(j));
            if (!all_zero(res)) fh.record(idx_str({{"i", i}, {"j", j}}), vec_to_string(res));
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            ++gh.evaluated;
            auto res = phi.g.apply(src.h.bracket_basis(a, b)) - dst.h.bracket(phi.g.column(a), phi.g.column(b));
            if (!all_zero(res)) gh.record(idx_str({{"a", a}, {"b", b}}), vec_to_string(res));
        }
    CheckResult rr{"g(rho_x h) = rho'_{f x} g h", "", 0, 0, {}}, pr{"f(psi_h x) = psi'_{g h} f x", "", 0, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            auto x = unit_vector<S>(m, i), hv = unit_vector<S>(n, a);
            ++rr.evaluated;
            auto r1 = phi.g.apply(src.rho_act(x, hv)) - dst.rho_act(phi.f.column(i), phi.g.column(a));
            if (!all_zero(r1)) rr.record(idx_str({{"i", i}, {"a", a}}), vec_to_string(r1));
            ++pr.evaluated;
            auto r2 = phi.f.apply(src.psi_act(hv, x)) - dst.psi_act(phi.g.column(a), phi.f.column(i));
            if (!all_zero(r2)) pr.record(idx_str({{"a", a}, {"i", i}}), vec_to_string(r2));
        }
    rep.checks = {fh, gh, rr, pr};
    return rep;
}

// ---- Rota–Baxter operators of weight 1 ----

inline ValidationReport check_rota_baxter(const LieAlgebra<Rational>& g, const Matrix<Rational>& R) {
    const int m = g.dim();
    if (R.rows() != static_cast<std::size_t>(m) || R.cols() != static_cast<std::size_t>(m))
        fail(ErrorKind::DimensionMismatch, "operator must be dim g x dim g");
    ValidationReport rep;
    rep.subject = "Rota-Baxter operator";
    CheckResult c{"[Rx,Ry] = R([Rx,y] + [x,Ry] + [x,y])", "", 0, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            ++c.evaluated;
            auto x = unit_vector<Rational>(m, i), y = unit_vector<Rational>(m, j);
            auto rx = R.column(i), ry = R.column(j);
            auto res = g.bracket(rx, ry) - R.apply(g.bracket(rx, y) + g.bracket(x, ry) + g.bracket_basis(i, j));
            if (!all_zero(res)) c.record(idx_str({{"i", i}, {"j", j}}), vec_to_string(res));
        }
    rep.checks.push_back(c);
    return rep;
}

struct RotaBaxterSplitting {
    MatchedPair<Rational> pair;    // (G_diag, G_R)
    Matrix<Rational> basis;        // columns: (e_i,e_i) then (R e_i, e_i + R e_i) in g⊕g
    Matrix<Rational> basis_inverse;
};

// g⊕g = G_diag ⊕ G_R; actions read off the direct-product bracket by projection
inline RotaBaxterSplitting rota_baxter_matched_pair(const LieAlgebra<Rational>& g, const Matrix<Rational>& R) {
    auto chk = check_rota_baxter(g, R);
    if (!chk.valid()) fail(ErrorKind::NotRotaBaxter, chk.to_text());
    const int m = g.dim();
    Matrix<Rational> B(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        B(i, i) = 1;
        B(m + i, i) = 1;
        for (int k = 0; k < m; ++k) {
            B(k, m + i) = R(k, i);
            B(m + k, m + i) = R(k, i);
        }
        B(m + i, m + i) += 1;
    }
    Matrix<Rational> Binv = inverse(B);
    auto prod_bracket = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        auto a = g.bracket(detail::slice(u, 0, m), detail::slice(v, 0, m));
        auto b = g.bracket(detail::slice(u, m, m), detail::slice(v, m, m));
        return detail::concat(a, b);
    };
    // full bracket in the adapted basis
    auto adapted = [&](int I, int J) { return Binv.apply(prod_bracket(B.column(I), B.column(J))); };
    LieAlgebra<Rational> gd(m), gr(m);
    Tensor3<Rational> rho(m, m, m), psi(m, m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i < j) {
                auto d = adapted(i, j);
                auto r = adapted(m + i, m + j);
                for (int k = 0; k < m; ++k) {
                    if (!is_zero(d[m + k]) || !is_zero(r[k]))
                        fail(ErrorKind::NotRotaBaxter, "subalgebras are not closed");
                    gd.set_bracket(i, j, k, d[k]);
                    gr.set_bracket(i, j, k, r[m + k]);
                }
            }
            // ρ_x h = pr_2 [(x,0),(0,h)],  ψ_h x = pr_1 [(0,h),(x,0)]
            auto mixed = adapted(i, m + j);
            for (int k = 0; k < m; ++k) {
                rho(i, j, k) = mixed[m + k];
                psi(j, i, k) = -mixed[k];
            }
        }
    return RotaBaxterSplitting{MatchedPair<Rational>(gd, gr, rho, psi), B, Binv};
}

// ---- Lie bialgebras ----

// cobracket(k,i,j): δ(e_k) = Σ_{i<j} cobracket(k,i,j) e_i∧e_j, kept skew in (i,j)
struct LieBialgebra {
    LieAlgebra<Rational> g;
    Tensor3<Rational> cobracket;

    LieBialgebra() = default;
    LieBialgebra(LieAlgebra<Rational> g_, Tensor3<Rational> d) : g(std::move(g_)), cobracket(std::move(d)) {
        const int m = g.dim();
        if (!cobracket.same_shape(m, m, m)) fail(ErrorKind::MalformedTensor, "cobracket must be m x m x m");
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (cobracket(k, i, j) != -cobracket(k, j, i))
                        fail(ErrorKind::MalformedTensor, "cobracket not skew");
    }

    // [ε^i, ε^j] = Σ_k δ_k^{ij} ε^k
    LieAlgebra<Rational> dual_algebra() const {
        const int m = g.dim();
        LieAlgebra<Rational> d(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = 0; k < m; ++k) d.set_bracket(i, j, k, cobracket(k, i, j));
        return d;
    }

    SkewMultiMap<Rational> cobracket_map() const {
        const int m = g.dim();
        SkewMultiMap<Rational> f(1, m, static_cast<int>(binomial(m, 2)));
        const auto& pairs = subsets(m, 2);
        for (int k = 0; k < m; ++k)
            for (std::size_t p = 0; p < pairs.size(); ++p)
                f.coeff(k, static_cast<int>(p)) = cobracket(k, pairs[p][0], pairs[p][1]);
        return f;
    }
};

inline ValidationReport validate_bialgebra(const LieBialgebra& b) {
    ValidationReport rep;
    rep.subject = "Lie bialgebra";
    rep.checks.push_back(jacobi_check(b.g, "Jacobi on g"));
    rep.checks.push_back(jacobi_check(b.dual_algebra(), "Jacobi on g*"));
    CheckResult c{"cobracket is a 1-cocycle", "", 0, 0, {}};
    auto d = ce_coboundary(wedge_adjoint_rep(b.g, 2), b.cobracket_map());
    c.evaluated = d.size();
    if (!d.is_zero()) c.record("nonzero coefficients", d.nonzero_summary());
    rep.checks.push_back(c);
    return rep;
}

// (g, g*, ad*, ad*)
inline MatchedPair<Rational> bialgebra_to_matched_pair(const LieBialgebra& b) {
    const int m = b.g.dim();
    Tensor3<Rational> rho(m, m, m), psi(m, m, m);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < m; ++c) {
                // (ad*_{e_i} ε^a)(e_c) = -ε^a([e_i,e_c])
                rho(i, a, c) = -b.g.c(i, c, a);
                // (ad*_{ε^a} e_i)(ε^c) = -e_i([ε^a,ε^c])
                psi(a, i, c) = -b.cobracket(i, a, c);
            }
    return MatchedPair<Rational>(b.g, b.dual_algebra(), rho, psi);
}

} // namespace mpla
