#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "lie.hpp"
#include "matched_pair.hpp"
#include "validation.hpp"

namespace mpla {

// (V, W, α, β) over a matched pair (g, h, ρ, ψ).
// rho_V(i,a,b): e_i.v_a     psi_V(c,a,b): f_c.v_a
// rho_W(i,a,b): e_i.w_a     psi_W(c,a,b): f_c.w_a
// alpha(a,c,b): α_{v_a} f_c has w_b-coefficient
// beta(a,i,j):  β_{w_a} e_i has v_j-coefficient
template <class S>
struct MPRepresentation {
    MatchedPair<S> base;
    int p = 0, q = 0;
    Tensor3<S> rho_V, psi_V, rho_W, psi_W, alpha, beta;

    MPRepresentation() = default;
    MPRepresentation(MatchedPair<S> b, int p_, int q_)
        : base(std::move(b)), p(p_), q(q_),
          rho_V(base.m(), p_, p_), psi_V(base.n(), p_, p_),
          rho_W(base.m(), q_, q_), psi_W(base.n(), q_, q_),
          alpha(p_, base.n(), q_), beta(q_, base.m(), p_) {}

    int m() const { return base.m(); }
    int n() const { return base.n(); }

    void check_shapes() const {
        const int m = base.m(), n = base.n();
        auto need = [](bool ok, const char* what) {
            if (!ok) fail(ErrorKind::MalformedTensor, std::string(what) + " has the wrong shape");
        };
        need(rho_V.same_shape(m, p, p), "rho_V");
        need(psi_V.same_shape(n, p, p), "psi_V");
        need(rho_W.same_shape(m, q, q), "rho_W");
        need(psi_W.same_shape(n, q, q), "psi_W");
        need(alpha.same_shape(p, n, q), "alpha");
        need(beta.same_shape(q, m, p), "beta");
    }

    std::vector<S> rV(const std::vector<S>& x, const std::vector<S>& v) const { return rho_V.apply2(x, v); }
    std::vector<S> pV(const std::vector<S>& h, const std::vector<S>& v) const { return psi_V.apply2(h, v); }
    std::vector<S> rW(const std::vector<S>& x, const std::vector<S>& w) const { return rho_W.apply2(x, w); }
    std::vector<S> pW(const std::vector<S>& h, const std::vector<S>& w) const { return psi_W.apply2(h, w); }
    std::vector<S> al(const std::vector<S>& v, const std::vector<S>& h) const { return alpha.apply2(v, h); }
    std::vector<S> be(const std::vector<S>& w, const std::vector<S>& x) const { return beta.apply2(w, x); }

    friend bool operator==(const MPRepresentation& a, const MPRepresentation& b) {
        return a.base == b.base && a.p == b.p && a.q == b.q && a.rho_V == b.rho_V && a.psi_V == b.psi_V &&
               a.rho_W == b.rho_W && a.psi_W == b.psi_W && a.alpha == b.alpha && a.beta == b.beta;
    }
};

template <class S>
MPRepresentation<S> adjoint_representation(const MatchedPair<S>& mp) {
    MPRepresentation<S> r(mp, mp.m(), mp.n());
    r.rho_V = mp.g.structure();
    r.psi_V = mp.psi;
    r.rho_W = mp.rho;
    r.psi_W = mp.h.structure();
    r.alpha = mp.rho;  // α_x h = ρ_x h
    r.beta = mp.psi;   // β_h x = ψ_h x
    return r;
}

template <class S>
ValidationReport validate_mp_representation(const MPRepresentation<S>& r) {
    r.check_shapes();
    const auto& mp = r.base;
    const int m = mp.m(), n = mp.n(), p = r.p, q = r.q;
    ValidationReport rep;
    rep.subject = "matched pair representation";
    rep.checks.push_back(rep_law_check(mp.g, r.rho_V, "rho_V is a representation"));
    rep.checks.push_back(rep_law_check(mp.h, r.psi_V, "psi_V is a representation"));
    rep.checks.push_back(rep_law_check(mp.g, r.rho_W, "rho_W is a representation"));
    rep.checks.push_back(rep_law_check(mp.h, r.psi_W, "psi_W is a representation"));

    auto X = [&](int i) { return unit_vector<S>(m, i); };
    auto H = [&](int a) { return unit_vector<S>(n, a); };
    auto Vv = [&](int a) { return unit_vector<S>(p, a); };
    auto Ww = [&](int a) { return unit_vector<S>(q, a); };
    auto h_br = [&](const std::vector<S>& a, const std::vector<S>& b) { return mp.h.bracket(a, b); };
    auto g_br = [&](const std::vector<S>& a, const std::vector<S>& b) { return mp.g.bracket(a, b); };

    CheckResult c1{"alpha against rho", "(1-iden)", 0, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < p; ++a)
            for (int c = 0; c < n; ++c) {
                ++c1.evaluated;
                auto x = X(i), v = Vv(a), hh = H(c);
                auto res = r.al(r.rV(x, v), hh) - (r.rW(x, r.al(v, hh)) - r.al(v, mp.rho_act(x, hh)));
                if (!all_zero(res)) c1.record(idx_str({{"x", i}, {"v", a}, {"h", c}}), vec_to_string(res));
            }
    CheckResult c2{"beta against psi", "(2-iden)", 0, 0, {}};
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < q; ++a)
            for (int i = 0; i < m; ++i) {
                ++c2.evaluated;
                auto hh = H(c), w = Ww(a), x = X(i);
                auto res = r.be(r.pW(hh, w), x) - (r.pV(hh, r.be(w, x)) - r.be(w, mp.psi_act(hh, x)));
                if (!all_zero(res)) c2.record(idx_str({{"h", c}, {"w", a}, {"x", i}}), vec_to_string(res));
            }
    CheckResult c3{"rho_W and psi_W", "(3-iden)", 0, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < q; ++a) {
                ++c3.evaluated;
                auto x = X(i), hh = H(c), w = Ww(a);
                auto lhs = r.rW(x, r.pW(hh, w));
                auto rhs = r.pW(mp.rho_act(x, hh), w) + r.pW(hh, r.rW(x, w)) + r.al(r.be(w, x), hh) -
                           r.rW(mp.psi_act(hh, x), w);
                auto res = lhs - rhs;
                if (!all_zero(res)) c3.record(idx_str({{"x", i}, {"h", c}, {"w", a}}), vec_to_string(res));
            }
    CheckResult c4{"alpha against the bracket of h", "(4-iden)", 0, 0, {}};
    for (int a = 0; a < p; ++a)
        for (int c = 0; c < n; ++c)
            for (int d = c + 1; d < n; ++d) {
                ++c4.evaluated;
                auto v = Vv(a), hh = H(c), k = H(d);
                auto lhs = r.al(v, h_br(hh, k));
                auto rhs = r.pW(hh, r.al(v, k)) - r.pW(k, r.al(v, hh)) + r.al(r.pV(k, v), hh) - r.al(r.pV(hh, v), k);
                auto res = lhs - rhs;
                if (!all_zero(res)) c4.record(idx_str({{"v", a}, {"h", c}, {"k", d}}), vec_to_string(res));
            }
    CheckResult c5{"psi_V and rho_V", "(5-iden)", 0, 0, {}};
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < p; ++a) {
                ++c5.evaluated;
                auto hh = H(c), x = X(i), v = Vv(a);
                auto lhs = r.pV(hh, r.rV(x, v));
                auto rhs = r.rV(mp.psi_act(hh, x), v) + r.rV(x, r.pV(hh, v)) + r.be(r.al(v, hh), x) -
                           r.pV(mp.rho_act(x, hh), v);
                auto res = lhs - rhs;
                if (!all_zero(res)) c5.record(idx_str({{"h", c}, {"x", i}, {"v", a}}), vec_to_string(res));
            }
    CheckResult c6{"beta against the bracket of g", "(6-iden)", 0, 0, {}};
    for (int a = 0; a < q; ++a)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                ++c6.evaluated;
                auto w = Ww(a), x = X(i), y = X(j);
                auto lhs = r.be(w, g_br(x, y));
                auto rhs = r.rV(x, r.be(w, y)) - r.rV(y, r.be(w, x)) + r.be(r.rW(y, w), x) - r.be(r.rW(x, w), y);
                auto res = lhs - rhs;
                if (!all_zero(res)) c6.record(idx_str({{"w", a}, {"x", i}, {"y", j}}), vec_to_string(res));
            }
    for (auto* c : {&c1, &c2, &c3, &c4, &c5, &c6}) rep.checks.push_back(*c);
    return rep;
}

// (g⋉V, h⋉W, ρ⋉α, ψ⋉β); the g-basis precedes V, the h-basis precedes W
template <class S>
MatchedPair<S> semidirect_product_unchecked(const MPRepresentation<S>& r) {
    r.check_shapes();
    const auto& mp = r.base;
    const int m = mp.m(), n = mp.n(), p = r.p, q = r.q;
    LieAlgebra<S> G(m + p), Hh(n + q);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k) G.set_bracket(i, j, k, mp.g.c(i, j, k));
        // [(x,0),(0,v)] = (0, ρ_V(x) v)
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) G.set_bracket(i, m + a, m + b, r.rho_V(i, a, b));
    }
    for (int c = 0; c < n; ++c) {
        for (int d = c + 1; d < n; ++d)
            for (int e = 0; e < n; ++e) Hh.set_bracket(c, d, e, mp.h.c(c, d, e));
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) Hh.set_bracket(c, n + a, n + b, r.psi_W(c, a, b));
    }
    MatchedPair<S> out(G, Hh);
    // (ρ⋉α)_{(x,v)}(h,w) = (ρ_x h, ρ_W(x) w + α_v h)
    for (int i = 0; i < m; ++i) {
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) out.rho(i, c, d) = mp.rho(i, c, d);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) out.rho(i, n + a, n + b) = r.rho_W(i, a, b);
    }
    for (int a = 0; a < p; ++a)
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < q; ++b) out.rho(m + a, c, n + b) = r.alpha(a, c, b);
    // (ψ⋉β)_{(h,w)}(x,u) = (ψ_h x, ψ_V(h) u + β_w x)
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out.psi(c, i, j) = mp.psi(c, i, j);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) out.psi(c, m + a, m + b) = r.psi_V(c, a, b);
    }
    for (int a = 0; a < q; ++a)
        for (int i = 0; i < m; ++i)
            for (int b = 0; b < p; ++b) out.psi(n + a, i, m + b) = r.beta(a, i, b);
    return out;
}

template <class S>
MatchedPair<S> semidirect_product(const MPRepresentation<S>& r) {
    auto base = validate_matched_pair(r.base);
    if (!base.valid()) fail(ErrorKind::InvalidInput, "base is not a matched pair:\n" + base.to_text());
    auto rep = validate_mp_representation(r);
    if (!rep.valid()) fail(ErrorKind::InvalidInput, "not a representation:\n" + rep.to_text());
    return semidirect_product_unchecked(r);
}

// ρ_⋈(x,h)(v,w) = (ρ_V(x)v + ψ_V(h)v - β_w x, ψ_W(h)w + ρ_W(x)w - α_v h) on V⊕W
template <class S>
LieRep<S> induced_bicross_rep(const MPRepresentation<S>& r) {
    r.check_shapes();
    const int m = r.m(), n = r.n(), p = r.p, q = r.q;
    LieRep<S> out(bicrossed_bracket(r.base), p + q);
    for (int i = 0; i < m; ++i) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) out.action(i, a, b) = r.rho_V(i, a, b);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) out.action(i, p + a, p + b) = r.rho_W(i, a, b);
            for (int b = 0; b < p; ++b) out.action(i, p + a, b) = -r.beta(a, i, b);
        }
    }
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) out.action(m + c, a, b) = r.psi_V(c, a, b);
            for (int b = 0; b < q; ++b) out.action(m + c, a, p + b) = -r.alpha(a, c, b);
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) out.action(m + c, p + a, p + b) = r.psi_W(c, a, b);
    }
    return out;
}

// inverse of induced_bicross_rep; needs g to preserve V and h to preserve W
template <class S>
MPRepresentation<S> extract_rep_from_bicross(const MatchedPair<S>& base, const LieRep<S>& rep, int p, int q) {
    const int m = base.m(), n = base.n();
    if (rep.algebra.dim() != m + n || rep.space_dim != p + q)
        fail(ErrorKind::DimensionMismatch, "representation does not live on the bicrossed product with V⊕W");
    if (!(rep.algebra == bicrossed_bracket(base)))
        fail(ErrorKind::InvalidInput, "representation is not over the bicrossed product of the base");
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < q; ++b)
                if (!is_zero(rep.action(i, a, p + b)))
                    fail(ErrorKind::NotRestrictable, "g maps V into W at (x=" + std::to_string(i) + ",v=" +
                                                         std::to_string(a) + ",w=" + std::to_string(b) + ")");
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < p; ++b)
                if (!is_zero(rep.action(m + c, p + a, b)))
                    fail(ErrorKind::NotRestrictable, "h maps W into V at (h=" + std::to_string(c) + ",w=" +
                                                         std::to_string(a) + ",v=" + std::to_string(b) + ")");
    MPRepresentation<S> r(base, p, q);
    for (int i = 0; i < m; ++i) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) r.rho_V(i, a, b) = rep.action(i, a, b);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) r.rho_W(i, a, b) = rep.action(i, p + a, p + b);
            // β_w x = -pr_1 ρ_⋈(x,0)(0,w)
            for (int b = 0; b < p; ++b) r.beta(a, i, b) = -rep.action(i, p + a, b);
        }
    }
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) r.psi_V(c, a, b) = rep.action(m + c, a, b);
            // α_v h = -pr_2 ρ_⋈(0,h)(v,0)
            for (int b = 0; b < q; ++b) r.alpha(a, c, b) = -rep.action(m + c, a, p + b);
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) r.psi_W(c, a, b) = rep.action(m + c, p + a, p + b);
    }
    return r;
}

// (W*, V*, α*, β*): every action is minus the transpose
template <class S>
MPRepresentation<S> dual_representation(const MPRepresentation<S>& r) {
    r.check_shapes();
    const int m = r.m(), n = r.n(), p = r.p, q = r.q;
    MPRepresentation<S> d(r.base, q, p);
    for (int i = 0; i < m; ++i) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) d.rho_V(i, a, b) = -r.rho_W(i, b, a);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) d.rho_W(i, a, b) = -r.rho_V(i, b, a);
    }
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) d.psi_V(c, a, b) = -r.psi_W(c, b, a);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) d.psi_W(c, a, b) = -r.psi_V(c, b, a);
    }
    // (α*_{ω^a} f_c)(v_b) = -ω^a(α_{v_b} f_c)
    for (int a = 0; a < q; ++a)
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < p; ++b) d.alpha(a, c, b) = -r.alpha(b, c, a);
    // (β*_{ν^a} e_i)(w_b) = -ν^a(β_{w_b} e_i)
    for (int a = 0; a < p; ++a)
        for (int i = 0; i < m; ++i)
            for (int b = 0; b < q; ++b) d.beta(a, i, b) = -r.beta(b, i, a);
    return d;
}

// (h*, g*): (α_p h)(x) = -p(ρ_x h), (β_q x)(h) = -q(ψ_h x)
template <class S>
MPRepresentation<S> coadjoint_representation(const MatchedPair<S>& mp) {
    const int m = mp.m(), n = mp.n();
    MPRepresentation<S> r(mp, n, m);
    for (int i = 0; i < m; ++i) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) r.rho_V(i, a, b) = -mp.rho(i, b, a);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) r.rho_W(i, a, b) = -mp.g.c(i, b, a);
    }
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) r.psi_V(c, a, b) = -mp.h.c(c, b, a);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) r.psi_W(c, a, b) = -mp.psi(c, b, a);
    }
    // α: h* × h -> g*, (α_{φ^a} f_c)(e_i) = -φ^a(ρ_{e_i} f_c)
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < m; ++i) r.alpha(a, c, i) = -mp.rho(i, c, a);
    // β: g* × g -> h*, (β_{ε^a} e_i)(f_c) = -ε^a(ψ_{f_c} e_i)
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < n; ++c) r.beta(a, i, c) = -mp.psi(c, i, a);
    return r;
}

} // namespace mpla
