#pragma once

#include <optional>
#include <string>

#include "errors.hpp"
#include "linalg.hpp"
#include "matched_pair.hpp"
#include "mp_cohomology.hpp"
#include "mp_rep.hpp"

namespace mpla {

// ---- infinitesimal deformations ----

struct DeformationCandidate {
    Tensor3<Rational> mu1;   // m x m x m
    Tensor3<Rational> nu1;   // n x n x n
    Tensor3<Rational> rho1;  // m x n x n
    Tensor3<Rational> psi1;  // n x m x m

    static DeformationCandidate zero(int m, int n) {
        return {Tensor3<Rational>(m, m, m), Tensor3<Rational>(n, n, n), Tensor3<Rational>(m, n, n),
                Tensor3<Rational>(n, m, m)};
    }

    void check(int m, int n) const {
        if (!mu1.same_shape(m, m, m) || !nu1.same_shape(n, n, n) || !rho1.same_shape(m, n, n) ||
            !psi1.same_shape(n, m, m))
            fail(ErrorKind::ShapeMismatch, "deformation tensors do not fit the matched pair");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    if (mu1(i, j, k) != -mu1(j, i, k)) fail(ErrorKind::MalformedTensor, "mu1 is not skew");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (nu1(i, j, k) != -nu1(j, i, k)) fail(ErrorKind::MalformedTensor, "nu1 is not skew");
    }
};

// (μ₁⋉ρ₁, ψ₁⋊ν₁) as a 2-cochain with adjoint coefficients
inline MPCochain<Rational> deformation_cochain(const MatchedPair<Rational>& mp, const DeformationCandidate& d) {
    d.check(mp.m(), mp.n());
    auto total = StructureElement<Rational>::from_tensors(d.mu1, d.nu1, d.rho1, d.psi1).total();
    return MPCochain<Rational>::from_sum_map(total, mp.m(), mp.n(), mp.m(), mp.n());
}

// inverse of deformation_cochain
inline DeformationCandidate deformation_from_cochain(const MPCochain<Rational>& F) {
    if (F.degree != 2 || F.p != F.m || F.q != F.n) fail(ErrorKind::ShapeMismatch, "need an adjoint 2-cochain");
    const int m = F.m, n = F.n;
    auto d = DeformationCandidate::zero(m, n);
    const auto& c1 = F.piece(1);
    const auto& c2 = F.piece(2);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto v = c1.V.eval(std::vector<int>{i, j}, std::vector<int>{});
            for (int k = 0; k < m; ++k) d.mu1(i, j, k) = v[k];
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            auto v = c2.W.eval(std::vector<int>{}, std::vector<int>{a, b});
            for (int k = 0; k < n; ++k) d.nu1(a, b, k) = v[k];
        }
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            auto w = c1.W.eval(std::vector<int>{i}, std::vector<int>{a});
            for (int k = 0; k < n; ++k) d.rho1(i, a, k) = w[k];
            auto v = c2.V.eval(std::vector<int>{i}, std::vector<int>{a});
            for (int k = 0; k < m; ++k) d.psi1(a, i, k) = -v[k];
        }
    return d;
}

struct DeformReport {
    bool cocycle_route = false;
    bool ring_route = false;
    ValidationReport ring_report;  // axioms over k[t]/(t²), relabelled inf-1 .. inf-6
    MPCochain<Rational> cochain;

    bool agree() const { return cocycle_route == ring_route; }
    bool is_deformation() const { return cocycle_route && ring_route; }
};

inline void require_valid(const MatchedPair<Rational>& mp) {
    auto v = validate_matched_pair(mp);
    if (!v.valid()) fail(ErrorKind::InvalidInput, "not a matched pair:\n" + v.to_text());
}

inline MatchedPair<DualQ> deformed_pair(const MatchedPair<Rational>& mp, const DeformationCandidate& d) {
    auto lift = [](const Tensor3<Rational>& base, const Tensor3<Rational>& eps) {
        Tensor3<DualQ> t(base.d0(), base.d1(), base.d2());
        for (int i = 0; i < base.d0(); ++i)
            for (int j = 0; j < base.d1(); ++j)
                for (int k = 0; k < base.d2(); ++k) t(i, j, k) = DualQ(base(i, j, k), eps(i, j, k));
        return t;
    };
    return MatchedPair<DualQ>(LieAlgebra<DualQ>::from_tensor(lift(mp.g.structure(), d.mu1)),
                              LieAlgebra<DualQ>::from_tensor(lift(mp.h.structure(), d.nu1)), lift(mp.rho, d.rho1),
                              lift(mp.psi, d.psi1));
}

inline DeformReport deformation_check(const MatchedPair<Rational>& mp, const DeformationCandidate& d) {
    require_valid(mp);
    DeformReport r;
    r.cochain = deformation_cochain(mp, d);
    r.cocycle_route = delta_mpl_adjoint(mp, r.cochain).is_zero();
    r.ring_report = validate_matched_pair(deformed_pair(mp, d));
    r.ring_report.subject = "deformation over k[t]/(t^2)";
    static const char* labels[] = {"Eq. (inf-1)", "Eq. (inf-2)", "Eq. (inf-3)",
                                   "Eq. (inf-4)", "Eq. (inf-5)", "Eq. (inf-6)"};
    for (std::size_t i = 0; i < r.ring_report.checks.size() && i < 6; ++i) r.ring_report.checks[i].label = labels[i];
    r.ring_route = r.ring_report.valid();
    return r;
}

// the 1-cochain (f, g) with adjoint coefficients
inline MPCochain<Rational> degree1_cochain(const Matrix<Rational>& f, const Matrix<Rational>& g, int m, int n, int p,
                                           int q) {
    if (f.rows() != static_cast<std::size_t>(p) || f.cols() != static_cast<std::size_t>(m) ||
        g.rows() != static_cast<std::size_t>(q) || g.cols() != static_cast<std::size_t>(n))
        fail(ErrorKind::ShapeMismatch, "linear maps do not fit");
    auto c = MPCochain<Rational>::zero(m, n, p, q, 1);
    auto& pc = c.piece(1);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < p; ++k) pc.V.at(std::vector<int>{i}, std::vector<int>{}, k) = f(k, i);
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < q; ++k) pc.W.at(std::vector<int>{}, std::vector<int>{a}, k) = g(k, a);
    return c;
}

// is (id + t f, id + t g) a morphism from the deformation d to d'?
inline ValidationReport deformation_equiv_check(const MatchedPair<Rational>& mp, const DeformationCandidate& d,
                                                const DeformationCandidate& d2, const Matrix<Rational>& f,
                                                const Matrix<Rational>& g) {
    const int m = mp.m(), n = mp.n();
    d.check(m, n);
    d2.check(m, n);
    auto one = degree1_cochain(f, g, m, n, m, n);
    ValidationReport rep;
    rep.subject = "deformation equivalence";
    auto fapp = [&](const std::vector<Rational>& x) { return f.apply(x); };
    auto gapp = [&](const std::vector<Rational>& h) { return g.apply(h); };
    CheckResult c7{"mu1 - mu1' = [x,fy] - f[x,y] + [fx,y]", "Eq. (inf-7)", 0, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto x = unit_vector<Rational>(m, i), y = unit_vector<Rational>(m, j);
            auto lhs = d.mu1.apply2(x, y) - d2.mu1.apply2(x, y);
            auto rhs = mp.g.bracket(x, fapp(y)) - fapp(mp.g.bracket(x, y)) + mp.g.bracket(fapp(x), y);
            ++c7.evaluated;
            auto res = lhs - rhs;
            if (!all_zero(res)) c7.record(idx_str({{"i", i}, {"j", j}}), vec_to_string(res));
        }
    CheckResult c8{"nu1 - nu1' = [h,gk] - g[h,k] + [gh,k]", "Eq. (inf-8)", 0, 0, {}};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto h = unit_vector<Rational>(n, a), k = unit_vector<Rational>(n, b);
            auto lhs = d.nu1.apply2(h, k) - d2.nu1.apply2(h, k);
            auto rhs = mp.h.bracket(h, gapp(k)) - gapp(mp.h.bracket(h, k)) + mp.h.bracket(gapp(h), k);
            ++c8.evaluated;
            auto res = lhs - rhs;
            if (!all_zero(res)) c8.record(idx_str({{"a", a}, {"b", b}}), vec_to_string(res));
        }
    CheckResult c9{"rho1 - rho1' = rho_x g h - g rho_x h + rho_{fx} h", "Eq. (inf-9)", 0, 0, {}};
    CheckResult c10{"psi1 - psi1' = psi_h f x - f psi_h x + psi_{gh} x", "Eq. (inf-10)", 0, 0, {}};
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            auto x = unit_vector<Rational>(m, i);
            auto h = unit_vector<Rational>(n, a);
            auto lhs = d.rho1.apply2(x, h) - d2.rho1.apply2(x, h);
            auto rhs = mp.rho.apply2(x, gapp(h)) - gapp(mp.rho.apply2(x, h)) + mp.rho.apply2(fapp(x), h);
            ++c9.evaluated;
            auto res = lhs - rhs;
            if (!all_zero(res)) c9.record(idx_str({{"i", i}, {"a", a}}), vec_to_string(res));
            auto lhs2 = d.psi1.apply2(h, x) - d2.psi1.apply2(h, x);
            auto rhs2 = mp.psi.apply2(h, fapp(x)) - fapp(mp.psi.apply2(h, x)) + mp.psi.apply2(gapp(h), x);
            ++c10.evaluated;
            auto res2 = lhs2 - rhs2;
            if (!all_zero(res2)) c10.record(idx_str({{"a", a}, {"i", i}}), vec_to_string(res2));
        }
    rep.checks = {c7, c8, c9, c10};
    CheckResult cid{"difference of cochains is the coboundary of (f,g)", "", 1, 0, {}};
    auto diff = deformation_cochain(mp, d) - deformation_cochain(mp, d2);
    auto res = diff - delta_mpl_adjoint(mp, one);
    if (!res.is_zero()) cid.record("(f,g)", res.to_sum_map().nonzero_summary());
    rep.checks.push_back(cid);
    return rep;
}

// ---- abelian extensions ----

// total pair on (g⊕V, h⊕W), base indices first in each block
struct AbelianExtension {
    MatchedPair<Rational> total;
    int m = 0, p = 0, n = 0, q = 0;

    MatchedPair<Rational> base() const;
};

// checks the block shape of an extension: V, W abelian, fibres preserved, projections well defined
inline ValidationReport validate_extension_shape(const AbelianExtension& e) {
    const int m = e.m, p = e.p, n = e.n, q = e.q;
    const auto& T = e.total;
    if (T.m() != m + p || T.n() != n + q) fail(ErrorKind::ShapeMismatch, "split does not match the total pair");
    ValidationReport rep;
    rep.subject = "abelian extension";
    CheckResult cv{"V is an abelian ideal of g-hat", "", 0, 0, {}};
    for (int a = 0; a < p; ++a)
        for (int j = 0; j < m + p; ++j)
            for (int k = 0; k < m; ++k) {
                ++cv.evaluated;
                if (!is_zero(T.g.c(m + a, j, k))) cv.record(idx_str({{"v", a}, {"j", j}, {"k", k}}), "nonzero");
            }
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int k = m; k < m + p; ++k)
                if (!is_zero(T.g.c(m + a, m + b, k))) cv.record(idx_str({{"v", a}, {"w", b}}), "nonzero");
    CheckResult cw{"W is an abelian ideal of h-hat", "", 0, 0, {}};
    for (int a = 0; a < q; ++a)
        for (int j = 0; j < n + q; ++j)
            for (int k = 0; k < n; ++k) {
                ++cw.evaluated;
                if (!is_zero(T.h.c(n + a, j, k))) cw.record(idx_str({{"w", a}, {"j", j}, {"k", k}}), "nonzero");
            }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int k = n; k < n + q; ++k)
                if (!is_zero(T.h.c(n + a, n + b, k))) cw.record(idx_str({{"w", a}, {"w'", b}}), "nonzero");
    CheckResult cr{"rho-hat lands in W on fibre inputs", "", 0, 0, {}};
    for (int i = 0; i < m + p; ++i)
        for (int b = 0; b < n + q; ++b) {
            if (i < m && b < n) continue;
            for (int k = 0; k < n; ++k) {
                ++cr.evaluated;
                if (!is_zero(T.rho(i, b, k))) cr.record(idx_str({{"i", i}, {"b", b}, {"k", k}}), "nonzero");
            }
        }
    CheckResult cp{"psi-hat lands in V on fibre inputs", "", 0, 0, {}};
    for (int b = 0; b < n + q; ++b)
        for (int i = 0; i < m + p; ++i) {
            if (i < m && b < n) continue;
            for (int k = 0; k < m; ++k) {
                ++cp.evaluated;
                if (!is_zero(T.psi(b, i, k))) cp.record(idx_str({{"b", b}, {"i", i}, {"k", k}}), "nonzero");
            }
        }
    CheckResult cf{"fibres act trivially on fibres", "", 0, 0, {}};
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) {
            for (int k = n; k < n + q; ++k) {
                ++cf.evaluated;
                if (!is_zero(T.rho(m + a, n + b, k))) cf.record(idx_str({{"v", a}, {"w", b}}), "rho nonzero");
            }
            for (int k = m; k < m + p; ++k)
                if (!is_zero(T.psi(n + b, m + a, k))) cf.record(idx_str({{"w", b}, {"v", a}}), "psi nonzero");
        }
    rep.checks = {cv, cw, cr, cp, cf};
    return rep;
}

inline MatchedPair<Rational> AbelianExtension::base() const {
    MatchedPair<Rational> b{LieAlgebra<Rational>(m), LieAlgebra<Rational>(n)};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k) b.g.set_bracket(i, j, k, total.g.c(i, j, k));
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            for (int k = 0; k < n; ++k) b.h.set_bracket(a, c, k, total.h.c(a, c, k));
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            for (int k = 0; k < n; ++k) b.rho(i, a, k) = total.rho(i, a, k);
            for (int k = 0; k < m; ++k) b.psi(a, i, k) = total.psi(a, i, k);
        }
    return b;
}

template <class S>
std::vector<S> subvec(const std::vector<S>& v, int off, int len) {
    return std::vector<S>(v.begin() + off, v.begin() + off + len);
}

struct Section {
    Matrix<Rational> s1;  // (m+p) x m
    Matrix<Rational> s2;  // (n+q) x n

    static Section canonical(int m, int p, int n, int q) {
        Section s{Matrix<Rational>(m + p, m), Matrix<Rational>(n + q, n)};
        for (int i = 0; i < m; ++i) s.s1(i, i) = 1;
        for (int a = 0; a < n; ++a) s.s2(a, a) = 1;
        return s;
    }
};

inline void check_section(const AbelianExtension& e, const Section& s) {
    if (s.s1.rows() != static_cast<std::size_t>(e.m + e.p) || s.s1.cols() != static_cast<std::size_t>(e.m) ||
        s.s2.rows() != static_cast<std::size_t>(e.n + e.q) || s.s2.cols() != static_cast<std::size_t>(e.n))
        fail(ErrorKind::NotASection, "section has the wrong shape");
    for (int i = 0; i < e.m; ++i)
        for (int j = 0; j < e.m; ++j)
            if (s.s1(i, j) != (i == j ? 1 : 0)) fail(ErrorKind::NotASection, "j1 s1 is not the identity");
    for (int a = 0; a < e.n; ++a)
        for (int c = 0; c < e.n; ++c)
            if (s.s2(a, c) != (a == c ? 1 : 0)) fail(ErrorKind::NotASection, "j2 s2 is not the identity");
}

// the representation on (V, W) seen through a section (independent of the section)
inline MPRepresentation<Rational> induced_representation(const AbelianExtension& e, const Section& s) {
    check_section(e, s);
    const int m = e.m, p = e.p, n = e.n, q = e.q;
    const auto& T = e.total;
    MPRepresentation<Rational> r(e.base(), p, q);
    for (int i = 0; i < m; ++i) {
        auto sx = s.s1.column(i);
        for (int a = 0; a < p; ++a) {
            auto val = T.g.bracket(sx, unit_vector<Rational>(m + p, m + a));
            for (int b = 0; b < p; ++b) r.rho_V(i, a, b) = val[m + b];
        }
        for (int a = 0; a < q; ++a) {
            auto val = T.rho.apply2(sx, unit_vector<Rational>(n + q, n + a));
            for (int b = 0; b < q; ++b) r.rho_W(i, a, b) = val[n + b];
        }
    }
    for (int c = 0; c < n; ++c) {
        auto sh = s.s2.column(c);
        for (int a = 0; a < p; ++a) {
            auto val = T.psi.apply2(sh, unit_vector<Rational>(m + p, m + a));
            for (int b = 0; b < p; ++b) r.psi_V(c, a, b) = val[m + b];
        }
        for (int a = 0; a < q; ++a) {
            auto val = T.h.bracket(sh, unit_vector<Rational>(n + q, n + a));
            for (int b = 0; b < q; ++b) r.psi_W(c, a, b) = val[n + b];
        }
    }
    for (int a = 0; a < p; ++a)
        for (int c = 0; c < n; ++c) {
            auto val = T.rho.apply2(unit_vector<Rational>(m + p, m + a), s.s2.column(c));
            for (int b = 0; b < q; ++b) r.alpha(a, c, b) = val[n + b];
        }
    for (int a = 0; a < q; ++a)
        for (int i = 0; i < m; ++i) {
            auto val = T.psi.apply2(unit_vector<Rational>(n + q, n + a), s.s1.column(i));
            for (int b = 0; b < p; ++b) r.beta(a, i, b) = val[m + b];
        }
    return r;
}

inline AbelianExtension cocycle_to_extension(const MPRepresentation<Rational>& rep, const MPCochain<Rational>& F) {
    check_cochain(rep, F);
    if (F.degree != 2) fail(ErrorKind::ArityMismatch, "extensions come from 2-cochains");
    auto v = validate_mp_representation(rep);
    if (!v.valid()) fail(ErrorKind::InvalidInput, "not a representation:\n" + v.to_text());
    if (!delta_mpl_coeff(rep, F).is_zero()) fail(ErrorKind::NotACocycle, "the 2-cochain is not closed");
    const auto& mp = rep.base;
    const int m = mp.m(), n = mp.n(), p = rep.p, q = rep.q;
    AbelianExtension e;
    e.m = m, e.p = p, e.n = n, e.q = q;
    e.total = semidirect_product_unchecked(rep);
    const auto& c1 = F.piece(1);
    const auto& c2 = F.piece(2);
    // F1(x,y) into the V-part of [x,y]
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto val = c1.V.eval(std::vector<int>{i, j}, std::vector<int>{});
            for (int b = 0; b < p; ++b) e.total.g.set_bracket(i, j, m + b, e.total.g.c(i, j, m + b) + val[b]);
        }
    // F2(h,k) into the W-part of [h,k]
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            auto val = c2.W.eval(std::vector<int>{}, std::vector<int>{a, c});
            for (int b = 0; b < q; ++b) e.total.h.set_bracket(a, c, n + b, e.total.h.c(a, c, n + b) + val[b]);
        }
    // ρ̂_x h gains F1(x,h), ψ̂_h x gains -F2(x,h)
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            auto w = c1.W.eval(std::vector<int>{i}, std::vector<int>{a});
            for (int b = 0; b < q; ++b) e.total.rho(i, a, n + b) += w[b];
            auto v2 = c2.V.eval(std::vector<int>{i}, std::vector<int>{a});
            for (int b = 0; b < p; ++b) e.total.psi(a, i, m + b) -= v2[b];
        }
    return e;
}

inline MPCochain<Rational> extension_to_cocycle(const AbelianExtension& e, const Section& s) {
    check_section(e, s);
    const int m = e.m, p = e.p, n = e.n, q = e.q;
    const auto& T = e.total;
    auto b = e.base();
    auto F = MPCochain<Rational>::zero(m, n, p, q, 2);
    auto& c1 = F.piece(1);
    auto& c2 = F.piece(2);
    auto s1 = [&](const std::vector<Rational>& x) { return s.s1.apply(x); };
    auto s2 = [&](const std::vector<Rational>& h) { return s.s2.apply(h); };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto x = unit_vector<Rational>(m, i), y = unit_vector<Rational>(m, j);
            auto val = T.g.bracket(s1(x), s1(y)) - s1(b.g.bracket(x, y));
            for (int k = 0; k < p; ++k) c1.V.at(std::vector<int>{i, j}, std::vector<int>{}, k) = val[m + k];
        }
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            auto h = unit_vector<Rational>(n, a), k = unit_vector<Rational>(n, c);
            auto val = T.h.bracket(s2(h), s2(k)) - s2(b.h.bracket(h, k));
            for (int t = 0; t < q; ++t) c2.W.at(std::vector<int>{}, std::vector<int>{a, c}, t) = val[n + t];
        }
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
            auto x = unit_vector<Rational>(m, i);
            auto h = unit_vector<Rational>(n, a);
            auto w = T.rho.apply2(s1(x), s2(h)) - s2(b.rho.apply2(x, h));
            for (int t = 0; t < q; ++t) c1.W.at(std::vector<int>{i}, std::vector<int>{a}, t) = w[n + t];
            auto v = s1(b.psi.apply2(h, x)) - T.psi.apply2(s2(h), s1(x));
            for (int t = 0; t < p; ++t) c2.V.at(std::vector<int>{i}, std::vector<int>{a}, t) = v[m + t];
        }
    return F;
}

// (x,v) ↦ (x, v + θx), (h,w) ↦ (h, w + ϑh): from ext(F) to ext(F') when F - F' = δ(θ,ϑ)
inline MPMorphism<Rational> extension_isomorphism(int m, int p, int n, int q, const Matrix<Rational>& theta,
                                                  const Matrix<Rational>& vartheta) {
    auto f = Matrix<Rational>::identity(m + p);
    auto g = Matrix<Rational>::identity(n + q);
    for (int k = 0; k < p; ++k)
        for (int i = 0; i < m; ++i) f(m + k, i) = theta(k, i);
    for (int k = 0; k < q; ++k)
        for (int a = 0; a < n; ++a) g(n + k, a) = vartheta(k, a);
    return {f, g};
}

} // namespace mpla
