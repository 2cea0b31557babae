#pragma once

#include <string>
#include <vector>

#include "bigraded.hpp"
#include "errors.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "matched_pair.hpp"
#include "mp_rep.hpp"
#include "parallel.hpp"

namespace mpla {

// n-cochain with coefficients in (V, W).
// degree 0: one piece (r = 0) holding (v, w).
// degree n >= 1: pieces r = 1..n; V-part on (n-r+1 | r-1) slots, W-part on (n-r | r) slots.
template <class S>
struct MPCochain {
    struct Piece {
        int r = 0;
        BiTensor<S> V;
        BiTensor<S> W;
    };

    int degree = 0;
    int m = 0, n = 0, p = 0, q = 0;
    std::vector<Piece> pieces;

    static MPCochain zero(int m, int n, int p, int q, int degree) {
        if (degree < 0) fail(ErrorKind::ArityMismatch, "negative cochain degree");
        MPCochain c;
        c.degree = degree;
        c.m = m, c.n = n, c.p = p, c.q = q;
        if (degree == 0) {
            c.pieces.push_back(Piece{0, BiTensor<S>(m, n, 0, 0, p), BiTensor<S>(m, n, 0, 0, q)});
        } else {
            for (int r = 1; r <= degree; ++r)
                c.pieces.push_back(Piece{r, BiTensor<S>(m, n, degree - r + 1, r - 1, p),
                                         BiTensor<S>(m, n, degree - r, r, q)});
        }
        return c;
    }

    Piece& piece(int r) {
        for (auto& pc : pieces)
            if (pc.r == r) return pc;
        fail(ErrorKind::ArityMismatch, "no component r=" + std::to_string(r));
    }
    const Piece& piece(int r) const {
        for (const auto& pc : pieces)
            if (pc.r == r) return pc;
        fail(ErrorKind::ArityMismatch, "no component r=" + std::to_string(r));
    }

    std::size_t dim() const {
        std::size_t d = 0;
        for (const auto& pc : pieces) d += pc.V.size() + pc.W.size();
        return d;
    }

    // basis order: r ascending, V block then W block, each lex over (g-tuple, h-tuple, index)
    std::vector<S> flatten() const {
        std::vector<S> out;
        out.reserve(dim());
        for (const auto& pc : pieces) {
            out.insert(out.end(), pc.V.coefficients().begin(), pc.V.coefficients().end());
            out.insert(out.end(), pc.W.coefficients().begin(), pc.W.coefficients().end());
        }
        return out;
    }

    static MPCochain unflatten(int m, int n, int p, int q, int degree, const std::vector<S>& v) {
        MPCochain c = zero(m, n, p, q, degree);
        if (v.size() != c.dim()) fail(ErrorKind::DimensionMismatch, "flat cochain length");
        std::size_t at = 0;
        for (auto& pc : c.pieces) {
            for (auto& x : pc.V.coefficients()) x = v[at++];
            for (auto& x : pc.W.coefficients()) x = v[at++];
        }
        return c;
    }

    // the same data as one map Λ^degree(g⊕h) -> V⊕W
    SkewMultiMap<S> to_sum_map() const {
        SkewMultiMap<S> f(degree, m + n, p + q);
        for (const auto& pc : pieces) {
            add_embedded(pc.V, 0, f);
            add_embedded(pc.W, p, f);
        }
        return f;
    }

    // restriction of a sum map; `clean` reports whether nothing outside the cochain space was dropped
    static MPCochain from_sum_map(const SkewMultiMap<S>& f, int m, int n, int p, int q, bool* clean = nullptr) {
        if (f.domain_dim() != m + n || f.codomain_dim() != p + q)
            fail(ErrorKind::SpaceMismatch, "sum map does not live on g⊕h -> V⊕W");
        MPCochain c = zero(m, n, p, q, f.arity());
        for (auto& pc : c.pieces) {
            extract_block(f, 0, pc.V);
            extract_block(f, p, pc.W);
        }
        if (clean) *clean = (c.to_sum_map() == f);
        return c;
    }

    bool same_space(const MPCochain& o) const {
        return degree == o.degree && m == o.m && n == o.n && p == o.p && q == o.q;
    }
    bool is_zero() const {
        for (const auto& pc : pieces)
            if (!pc.V.is_zero() || !pc.W.is_zero()) return false;
        return true;
    }
    MPCochain& operator+=(const MPCochain& o) {
        if (!same_space(o)) fail(ErrorKind::SpaceMismatch, "cochain sum");
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            pieces[i].V += o.pieces[i].V;
            pieces[i].W += o.pieces[i].W;
        }
        return *this;
    }
    MPCochain& operator-=(const MPCochain& o) {
        if (!same_space(o)) fail(ErrorKind::SpaceMismatch, "cochain difference");
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            pieces[i].V -= o.pieces[i].V;
            pieces[i].W -= o.pieces[i].W;
        }
        return *this;
    }
    MPCochain& operator*=(const S& c) {
        for (auto& pc : pieces) {
            pc.V *= c;
            pc.W *= c;
        }
        return *this;
    }
    friend MPCochain operator+(MPCochain a, const MPCochain& b) { return a += b; }
    friend MPCochain operator-(MPCochain a, const MPCochain& b) { return a -= b; }
    friend bool operator==(const MPCochain& a, const MPCochain& b) {
        if (!a.same_space(b)) return false;
        for (std::size_t i = 0; i < a.pieces.size(); ++i)
            if (!(a.pieces[i].V == b.pieces[i].V) || !(a.pieces[i].W == b.pieces[i].W)) return false;
        return true;
    }
};

inline std::size_t cochain_space_dim(int m, int n, int p, int q, int degree) {
    if (degree < 0) fail(ErrorKind::ArityMismatch, "negative cochain degree");
    if (degree == 0) return static_cast<std::size_t>(p + q);
    std::size_t d = 0;
    for (int r = 1; r <= degree; ++r)
        d += binomial(m, degree - r + 1) * binomial(n, r - 1) * p + binomial(m, degree - r) * binomial(n, r) * q;
    return d;
}

template <class S>
void check_cochain(const MPRepresentation<S>& rep, const MPCochain<S>& F) {
    if (F.m != rep.m() || F.n != rep.n() || F.p != rep.p || F.q != rep.q)
        fail(ErrorKind::CoefficientMismatch, "cochain does not match the representation");
}

// ---- adjoint route: δ F = -[π, F] with π = μ⋉ρ + ψ⋊ν ----
// In degree 0 the result is restricted to the cochain space (see degree0_full for the whole map).
template <class S>
MPCochain<S> delta_mpl_adjoint(const MatchedPair<S>& mp, const MPCochain<S>& F) {
    if (F.m != mp.m() || F.n != mp.n() || F.p != mp.m() || F.q != mp.n())
        fail(ErrorKind::CoefficientMismatch, "adjoint coboundary needs coefficients (g, h)");
    auto pi = mp.structure_element().total();
    auto d = nr_bracket(pi, F.to_sum_map());
    d *= S(-1);
    return MPCochain<S>::from_sum_map(d, F.m, F.n, F.p, F.q);
}

// ---- coefficient route ----

enum class SignConvention { Corrected, AsPrinted };

namespace detail {

struct Slots {
    std::vector<int> g, h;
};

// removes position i
inline std::vector<int> drop(const std::vector<int>& v, int i) {
    std::vector<int> o;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (k != i) o.push_back(v[k]);
    return o;
}

inline std::vector<int> drop2(const std::vector<int>& v, int i, int j) {
    std::vector<int> o;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (k != i && k != j) o.push_back(v[k]);
    return o;
}

template <class S>
S sgn(long e) {
    return (e % 2 == 0) ? S(1) : S(-1);
}

// out += c * F(g-args with g[pos] replaced by vector vec ; h-args)
template <class S>
void acc_g_vec(const BiTensor<S>& F, std::vector<int> gargs, int pos, const std::vector<S>& vec,
               const std::vector<int>& hargs, const S& c, std::vector<S>& out) {
    for (std::size_t k = 0; k < vec.size(); ++k) {
        if (is_zero(vec[k])) continue;
        gargs[pos] = static_cast<int>(k);
        F.accumulate(gargs, hargs, c * vec[k], out);
    }
}

template <class S>
void acc_h_vec(const BiTensor<S>& F, const std::vector<int>& gargs, std::vector<int> hargs, int pos,
               const std::vector<S>& vec, const S& c, std::vector<S>& out) {
    for (std::size_t k = 0; k < vec.size(); ++k) {
        if (is_zero(vec[k])) continue;
        hargs[pos] = static_cast<int>(k);
        F.accumulate(gargs, hargs, c * vec[k], out);
    }
}

template <class S>
std::vector<S> col(const Tensor3<S>& t, int i, int j) {
    std::vector<S> v(t.d2());
    for (int k = 0; k < t.d2(); ++k) v[k] = t(i, j, k);
    return v;
}

} // namespace detail

// δ^{μ⋉ρ}(F_r) + δ^{ψ⋊ν}(F_{r-1}) for every output component, read slot by slot.
template <class S>
MPCochain<S> delta_mpl_coeff(const MPRepresentation<S>& rep, const MPCochain<S>& F,
                             SignConvention conv = SignConvention::Corrected) {
    check_cochain(rep, F);
    const auto& mp = rep.base;
    const int m = F.m, nh = F.n, p = F.p, q = F.q;
    const int n = F.degree;
    using detail::sgn;
    MPCochain<S> out = MPCochain<S>::zero(m, nh, p, q, n + 1);
    const bool printed = conv == SignConvention::AsPrinted;

    if (n == 0) {
        const auto& v = F.pieces[0].V.coefficients();
        const auto& w = F.pieces[0].W.coefficients();
        auto& o = out.piece(1);
        for (int i = 0; i < m; ++i) {
            auto x = unit_vector<S>(m, i);
            auto val = rep.rV(x, v) - rep.be(w, x);
            for (int b = 0; b < p; ++b) o.V.at(std::vector<int>{i}, std::vector<int>{}, b) = val[b];
        }
        for (int c = 0; c < nh; ++c) {
            auto hv = unit_vector<S>(nh, c);
            auto val = rep.pW(hv, w) - rep.al(v, hv);
            for (int b = 0; b < q; ++b) o.W.at(std::vector<int>{}, std::vector<int>{c}, b) = val[b];
        }
        return out;
    }

    auto has = [&](int r) { return r >= 1 && r <= n; };

    // V-part of output component R: (n-R+2 | R-1) slots
    // W-part of output component R: (n-R+1 | R) slots
    for (int R = 1; R <= n + 1; ++R) {
        auto& o = out.piece(R);
        // ---- V-part ----
        {
            const int P = n - R + 2, Qh = R - 1;
            const auto& gt = subsets(m, P);
            const auto& ht = subsets(nh, Qh);
            for (std::size_t gi = 0; gi < gt.size(); ++gi)
                for (std::size_t hi = 0; hi < ht.size(); ++hi) {
                    const auto& x = gt[gi];
                    const auto& h = ht[hi];
                    std::vector<S> acc(p, S(0));
                    if (has(R)) {  // formula for δ^{μ⋉ρ} F_R, V-part
                        const int r = R;
                        const auto& FV = F.piece(r).V;
                        for (int i = 0; i < P; ++i) {
                            auto fv = FV.eval(detail::drop(x, i), h);
                            if (!all_zero(fv)) {
                                auto a = rep.rV(unit_vector<S>(m, x[i]), fv);
                                S s = sgn<S>(i);  // (-1)^{(i+1)+1}
                                for (int b = 0; b < p; ++b) acc[b] += s * a[b];
                            }
                        }
                        for (int i = 0; i < P; ++i)
                            for (int j = i + 1; j < P; ++j) {
                                auto br = mp.g.bracket_basis(x[i], x[j]);
                                std::vector<int> args = detail::drop2(x, i, j);
                                args.insert(args.begin(), 0);
                                detail::acc_g_vec(FV, args, 0, br, h, sgn<S>(i + j), acc);
                            }
                        for (int i = 0; i < P; ++i)
                            for (int k = 0; k < Qh; ++k) {
                                auto rh = detail::col(mp.rho, x[i], h[k]);
                                long e = printed ? (n - r + i + 1) : (i + 1);
                                detail::acc_h_vec(FV, detail::drop(x, i), h, k, rh, sgn<S>(e), acc);
                            }
                    }
                    if (has(R - 1)) {  // formula for δ^{ψ⋊ν} F_{R-1}, V-part
                        const int r = R - 1;
                        const auto& FV = F.piece(r).V;
                        const auto& FW = F.piece(r).W;
                        for (int i = 0; i < P; ++i) {
                            auto fw = FW.eval(detail::drop(x, i), h);
                            if (!all_zero(fw)) {
                                auto b = rep.be(fw, unit_vector<S>(m, x[i]));
                                S s = sgn<S>(i + 1);
                                for (int t = 0; t < p; ++t) acc[t] += s * b[t];
                            }
                        }
                        for (int i = 0; i < Qh; ++i) {
                            auto fv = FV.eval(x, detail::drop(h, i));
                            if (!all_zero(fv)) {
                                auto a = rep.pV(unit_vector<S>(nh, h[i]), fv);
                                S s = sgn<S>(n - r + i + 1);
                                for (int t = 0; t < p; ++t) acc[t] += s * a[t];
                            }
                        }
                        for (int j = 0; j < Qh; ++j)
                            for (int i = 0; i < P; ++i) {
                                auto px = detail::col(mp.psi, h[j], x[i]);
                                long e = printed ? (n - r + j + 1) : (n - r + j + 2);
                                detail::acc_g_vec(FV, x, i, px, detail::drop(h, j), sgn<S>(e), acc);
                            }
                        for (int i = 0; i < Qh; ++i)
                            for (int j = i + 1; j < Qh; ++j) {
                                auto br = mp.h.bracket_basis(h[i], h[j]);
                                std::vector<int> args = detail::drop2(h, i, j);
                                args.insert(args.begin(), 0);
                                detail::acc_h_vec(FV, x, args, 0, br, sgn<S>(n - r + 1 + i + j + 2), acc);
                            }
                    }
                    for (int b = 0; b < p; ++b) o.V.coeff(gi, hi, b) = acc[b];
                }
        }
        // ---- W-part ----
        {
            const int P = n - R + 1, Qh = R;
            const auto& gt = subsets(m, P);
            const auto& ht = subsets(nh, Qh);
            for (std::size_t gi = 0; gi < gt.size(); ++gi)
                for (std::size_t hi = 0; hi < ht.size(); ++hi) {
                    const auto& x = gt[gi];
                    const auto& h = ht[hi];
                    std::vector<S> acc(q, S(0));
                    if (has(R)) {  // δ^{μ⋉ρ} F_R, W-part
                        const int r = R;
                        const auto& FV = F.piece(r).V;
                        const auto& FW = F.piece(r).W;
                        for (int i = 0; i < P; ++i) {
                            auto fw = FW.eval(detail::drop(x, i), h);
                            if (!all_zero(fw)) {
                                auto a = rep.rW(unit_vector<S>(m, x[i]), fw);
                                S s = sgn<S>(i);
                                for (int t = 0; t < q; ++t) acc[t] += s * a[t];
                            }
                        }
                        for (int i = 0; i < Qh; ++i) {
                            auto fv = FV.eval(x, detail::drop(h, i));
                            if (!all_zero(fv)) {
                                auto a = rep.al(fv, unit_vector<S>(nh, h[i]));
                                S s = sgn<S>(n - r + i + 2);
                                for (int t = 0; t < q; ++t) acc[t] += s * a[t];
                            }
                        }
                        for (int i = 0; i < P; ++i)
                            for (int j = i + 1; j < P; ++j) {
                                auto br = mp.g.bracket_basis(x[i], x[j]);
                                std::vector<int> args = detail::drop2(x, i, j);
                                args.insert(args.begin(), 0);
                                detail::acc_g_vec(FW, args, 0, br, h, sgn<S>(i + j), acc);
                            }
                        for (int i = 0; i < P; ++i)
                            for (int k = 0; k < Qh; ++k) {
                                auto rh = detail::col(mp.rho, x[i], h[k]);
                                long e = printed ? (n - r + i + 2) : (i + 1);
                                detail::acc_h_vec(FW, detail::drop(x, i), h, k, rh, sgn<S>(e), acc);
                            }
                    }
                    if (has(R - 1)) {  // δ^{ψ⋊ν} F_{R-1}, W-part
                        const int r = R - 1;
                        const auto& FW = F.piece(r).W;
                        for (int i = 0; i < Qh; ++i) {
                            auto fw = FW.eval(x, detail::drop(h, i));
                            if (!all_zero(fw)) {
                                auto a = rep.pW(unit_vector<S>(nh, h[i]), fw);
                                S s = sgn<S>(n - r + i + 2);
                                for (int t = 0; t < q; ++t) acc[t] += s * a[t];
                            }
                        }
                        for (int j = 0; j < Qh; ++j)
                            for (int i = 0; i < P; ++i) {
                                auto px = detail::col(mp.psi, h[j], x[i]);
                                long e = printed ? (n - r + j + 2) : (n - r + j + 1);
                                detail::acc_g_vec(FW, x, i, px, detail::drop(h, j), sgn<S>(e), acc);
                            }
                        for (int i = 0; i < Qh; ++i)
                            for (int j = i + 1; j < Qh; ++j) {
                                auto br = mp.h.bracket_basis(h[i], h[j]);
                                std::vector<int> args = detail::drop2(h, i, j);
                                args.insert(args.begin(), 0);
                                detail::acc_h_vec(FW, x, args, 0, br, sgn<S>(n - r + i + j + 2), acc);
                            }
                    }
                    for (int b = 0; b < q; ++b) o.W.coeff(gi, hi, b) = acc[b];
                }
        }
    }
    return out;
}

// the degree-0 coboundary as a whole map g⊕h -> V⊕W, i.e. (x,h) ↦ ρ_⋈(x,h)(v,w)
template <class S>
SkewMultiMap<S> degree0_full(const MPRepresentation<S>& rep, const MPCochain<S>& F) {
    check_cochain(rep, F);
    if (F.degree != 0) fail(ErrorKind::ArityMismatch, "degree0_full needs a 0-cochain");
    return ce_coboundary(induced_bicross_rep(rep), F.to_sum_map());
}

// δ_CE on g⋈h with coefficients in V⊕W, restricted back to the cochain space
template <class S>
MPCochain<S> delta_via_bicross(const MPRepresentation<S>& rep, const MPCochain<S>& F, bool* clean = nullptr) {
    check_cochain(rep, F);
    auto d = ce_coboundary(induced_bicross_rep(rep), F.to_sum_map());
    return MPCochain<S>::from_sum_map(d, F.m, F.n, F.p, F.q, clean);
}

enum class Route { Adjoint, Coefficient };

inline Matrix<Rational> coboundary_matrix(const MPRepresentation<Rational>& rep, int degree,
                                          Route route = Route::Coefficient) {
    const int m = rep.m(), n = rep.n(), p = rep.p, q = rep.q;
    const std::size_t cols = cochain_space_dim(m, n, p, q, degree);
    const std::size_t rows = cochain_space_dim(m, n, p, q, degree + 1);
    Matrix<Rational> d(rows, cols);
    parallel_for(cols, [&](std::size_t j) {
        std::vector<Rational> e(cols, Rational(0));
        e[j] = 1;
        auto F = MPCochain<Rational>::unflatten(m, n, p, q, degree, e);
        auto out = route == Route::Adjoint ? delta_mpl_adjoint(rep.base, F) : delta_mpl_coeff(rep, F);
        auto c = out.flatten();
        for (std::size_t i = 0; i < rows; ++i) d(i, j) = c[i];
    });
    return d;
}

// matrix of (v,w) ↦ (h ↦ ψ_V(h)v, x ↦ ρ_W(x)w): the part of the degree-0 coboundary outside C^1
inline Matrix<Rational> degree0_defect_matrix(const MPRepresentation<Rational>& rep) {
    const int m = rep.m(), n = rep.n(), p = rep.p, q = rep.q;
    Matrix<Rational> o(static_cast<std::size_t>(n * p + m * q), static_cast<std::size_t>(p + q));
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) o(c * p + b, a) = rep.psi_V(c, a, b);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) o(n * p + i * q + b, p + a) = rep.rho_W(i, a, b);
    return o;
}

// columns span the 0-cochains whose whole coboundary already lies in C^1
inline Matrix<Rational> admissible_degree0_basis(const MPRepresentation<Rational>& rep) {
    return kernel_basis(degree0_defect_matrix(rep));
}

struct DegreeDims {
    int degree;
    std::size_t cochain_dim;
    std::size_t h_dim;
};

inline std::vector<DegreeDims> mpl_cohomology_dims(const MPRepresentation<Rational>& rep, int max_degree) {
    if (max_degree < 0) fail(ErrorKind::InvalidInput, "max degree must be >= 0");
    const int m = rep.m(), n = rep.n(), p = rep.p, q = rep.q;
    std::vector<DegreeDims> out;
    Matrix<Rational> d0 = coboundary_matrix(rep, 0);
    Matrix<Rational> defect = degree0_defect_matrix(rep);
    // H^0 = kernel of the whole degree-0 coboundary
    Matrix<Rational> whole(d0.rows() + defect.rows(), d0.cols());
    for (std::size_t i = 0; i < d0.rows(); ++i)
        for (std::size_t j = 0; j < d0.cols(); ++j) whole(i, j) = d0(i, j);
    for (std::size_t i = 0; i < defect.rows(); ++i)
        for (std::size_t j = 0; j < d0.cols(); ++j) whole(d0.rows() + i, j) = defect(i, j);
    out.push_back({0, cochain_space_dim(m, n, p, q, 0), kernel_dim(whole)});
    if (max_degree == 0) return out;
    Matrix<Rational> prev = d0 * kernel_basis(defect);
    for (int k = 1; k <= max_degree; ++k) {
        Matrix<Rational> d = coboundary_matrix(rep, k);
        out.push_back({k, cochain_space_dim(m, n, p, q, k), cohomology_dim(d, prev)});
        prev = std::move(d);
    }
    return out;
}

inline std::vector<DegreeDims> mpl_cohomology_dims(const MatchedPair<Rational>& mp, int max_degree) {
    return mpl_cohomology_dims(adjoint_representation(mp), max_degree);
}

// Φ: cochain -> sum map on g⋈h, as a matrix in both coordinate systems
inline Matrix<Rational> phi_matrix(int m, int n, int p, int q, int degree) {
    const std::size_t cols = cochain_space_dim(m, n, p, q, degree);
    SkewMultiMap<Rational> proto(degree, m + n, p + q);
    Matrix<Rational> mat(proto.size(), cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> e(cols, Rational(0));
        e[j] = 1;
        auto f = MPCochain<Rational>::unflatten(m, n, p, q, degree, e).to_sum_map();
        for (std::size_t i = 0; i < proto.size(); ++i) mat(i, j) = f.coefficients()[i];
    }
    return mat;
}

// Φ_{n+1} δ = δ_CE Φ_n; in degree 0 on the admissible subspace
template <class S>
bool phi_chain_check(const MPRepresentation<S>& rep, const MPCochain<S>& F) {
    auto lhs = delta_mpl_coeff(rep, F).to_sum_map();
    auto rhs = ce_coboundary(induced_bicross_rep(rep), F.to_sum_map());
    return lhs == rhs;
}

// ---- Lie bialgebra complex ----

// degree n: xi[r-1] : Λ^{n-r+1} g -> Λ^r g for r = 1..n
struct LieBiCochain {
    int degree = 1;
    int m = 0;
    std::vector<SkewMultiMap<Rational>> xi;

    static LieBiCochain zero(int m, int degree) {
        if (degree < 1) fail(ErrorKind::ArityMismatch, "bialgebra cochains start in degree 1");
        LieBiCochain c;
        c.degree = degree;
        c.m = m;
        for (int r = 1; r <= degree; ++r)
            c.xi.emplace_back(degree - r + 1, m, static_cast<int>(binomial(m, r)));
        return c;
    }
    bool is_zero() const {
        for (const auto& x : xi)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const LieBiCochain& a, const LieBiCochain& b) {
        return a.degree == b.degree && a.m == b.m && a.xi == b.xi;
    }
};

// Hom(Λ^p V, Λ^q V) -> Hom(Λ^q V*, Λ^p V*) in dual lex bases
inline SkewMultiMap<Rational> wedge_transpose(const SkewMultiMap<Rational>& f, int m, int q) {
    const int p = f.arity();
    SkewMultiMap<Rational> t(q, m, static_cast<int>(binomial(m, p)));
    for (std::size_t i = 0; i < binomial(m, p); ++i)
        for (std::size_t j = 0; j < binomial(m, q); ++j) t.coeff(j, static_cast<int>(i)) = f.coeff(i, static_cast<int>(j));
    return t;
}

inline LieBiCochain liebi_coboundary(const LieBialgebra& b, const LieBiCochain& xi) {
    const int m = b.g.dim(), n = xi.degree;
    if (xi.m != m) fail(ErrorKind::DimensionMismatch, "cochain dimension");
    LieBiCochain out = LieBiCochain::zero(m, n + 1);
    auto gs = b.dual_algebra();
    for (int R = 1; R <= n + 1; ++R) {
        auto& o = out.xi[R - 1];
        if (R <= n) o += ce_coboundary(wedge_adjoint_rep(b.g, R), xi.xi[R - 1]);
        if (R >= 2) {
            const auto& f = xi.xi[R - 2];  // Λ^{n-R+2} g -> Λ^{R-1} g
            const int pp = n - R + 2;
            auto t = wedge_transpose(f, m, R - 1);
            auto dt = ce_coboundary(wedge_adjoint_rep(gs, pp), t);
            o += wedge_transpose(dt, m, pp);
        }
    }
    return out;
}

// Ψ(ξ) = ξ̃ + ξ̄ as an adjoint cochain of (g, g*, ad*, ad*)
inline MPCochain<Rational> psi_map(const LieBialgebra& b, const LieBiCochain& xi) {
    const int m = b.g.dim(), n = xi.degree;
    auto out = MPCochain<Rational>::zero(m, m, m, m, n);
    for (int r = 1; r <= n; ++r) {
        const auto& f = xi.xi[r - 1];  // Λ^p g -> Λ^q g
        const int p = n - r + 1, q = r;
        auto& pc = out.piece(r);
        // ξ̃(x_I; η_J) = (-1)^q Σ_c <η_J ∧ ε^c, ξ(x_I)> e_c
        for (const auto& I : subsets(m, p))
            for (const auto& J : subsets(m, q - 1))
                for (int c = 0; c < m; ++c) {
                    std::vector<int> jc = J;
                    jc.push_back(c);
                    int s = sort_sign(jc);
                    if (s == 0) continue;
                    Rational v = f.at(I, static_cast<int>(subset_rank(jc, m)));
                    if ((s > 0) != (q % 2 == 0)) v = -v;
                    pc.V.at(I, J, c) = v;
                }
        // ξ̄(x_I; η_J) = Σ_c <η_J, ξ(x_I, e_c)> ε^c
        for (const auto& I : subsets(m, p - 1))
            for (const auto& J : subsets(m, q))
                for (int c = 0; c < m; ++c) {
                    std::vector<int> ic = I;
                    ic.push_back(c);
                    int s = sort_sign(ic);
                    if (s == 0) continue;
                    Rational v = f.at(ic, static_cast<int>(subset_rank(J, m)));
                    pc.W.at(I, J, c) = s > 0 ? v : Rational(-v);
                }
    }
    return out;
}

inline bool psi_compare(const LieBialgebra& b, const LieBiCochain& xi) {
    auto mp = bialgebra_to_matched_pair(b);
    return psi_map(b, liebi_coboundary(b, xi)) == delta_mpl_adjoint(mp, psi_map(b, xi));
}

} // namespace mpla
