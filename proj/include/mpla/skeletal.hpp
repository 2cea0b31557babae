#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "lie.hpp"
#include "matched_pair.hpp"
#include "mp_cohomology.hpp"
#include "mp_rep.hpp"
#include "validation.hpp"

namespace mpla {

// dense a x b x c x d, used for ρ₃ / ψ₃
struct Tensor4 {
    int d0 = 0, d1 = 0, d2 = 0, d3 = 0;
    std::vector<Rational> data;

    Tensor4() = default;
    Tensor4(int a, int b, int c, int d)
        : d0(a), d1(b), d2(c), d3(d), data(static_cast<std::size_t>(a) * b * c * d, Rational(0)) {}

    Rational& operator()(int i, int j, int k, int l) { return data[((static_cast<std::size_t>(i) * d1 + j) * d2 + k) * d3 + l]; }
    const Rational& operator()(int i, int j, int k, int l) const {
        return data[((static_cast<std::size_t>(i) * d1 + j) * d2 + k) * d3 + l];
    }
    bool same_shape(int a, int b, int c, int d) const { return d0 == a && d1 == b && d2 == c && d3 == d; }
    bool is_zero() const {
        for (const auto& c : data)
            if (!mpla::is_zero(c)) return false;
        return true;
    }
    std::vector<Rational> apply3(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                 const std::vector<Rational>& z) const {
        std::vector<Rational> out(d3, Rational(0));
        for (int i = 0; i < d0; ++i) {
            if (mpla::is_zero(x[i])) continue;
            for (int j = 0; j < d1; ++j) {
                if (mpla::is_zero(y[j])) continue;
                for (int k = 0; k < d2; ++k) {
                    if (mpla::is_zero(z[k])) continue;
                    Rational c = x[i] * y[j] * z[k];
                    for (int l = 0; l < d3; ++l) out[l] += c * (*this)(i, j, k, l);
                }
            }
        }
        return out;
    }
    friend bool operator==(const Tensor4& a, const Tensor4& b) {
        return a.same_shape(b.d0, b.d1, b.d2, b.d3) && a.data == b.data;
    }
};

// g1 --mu1--> g0 with [,] on g0 x g0 and g0 x g1, and mu3 : Λ³g0 -> g1
struct TwoTermLInfinity {
    int dim0 = 0, dim1 = 0;
    Matrix<Rational> mu1;          // dim0 x dim1
    Tensor3<Rational> bracket00;   // dim0 x dim0 x dim0
    Tensor3<Rational> bracket01;   // dim0 x dim1 x dim1, [x,v]; [v,x] = -[x,v]
    SkewMultiMap<Rational> mu3;    // arity 3 on dim0, values in dim1

    TwoTermLInfinity() = default;
    TwoTermLInfinity(int a, int b)
        : dim0(a), dim1(b), mu1(a, b), bracket00(a, a, a), bracket01(a, b, b), mu3(3, a, b) {}

    bool skeletal() const { return mu1.is_zero(); }

    void check_shapes() const {
        if (mu1.rows() != static_cast<std::size_t>(dim0) || mu1.cols() != static_cast<std::size_t>(dim1) ||
            !bracket00.same_shape(dim0, dim0, dim0) || !bracket01.same_shape(dim0, dim1, dim1) ||
            mu3.arity() != 3 || mu3.domain_dim() != dim0 || mu3.codomain_dim() != dim1)
            fail(ErrorKind::MalformedTensor, "2-term L-infinity tensors have inconsistent shapes");
        for (int i = 0; i < dim0; ++i)
            for (int j = 0; j < dim0; ++j)
                for (int k = 0; k < dim0; ++k)
                    if (bracket00(i, j, k) != -bracket00(j, i, k))
                        fail(ErrorKind::MalformedTensor, "bracket on g0 is not skew");
    }

    LieAlgebra<Rational> degree0() const { return LieAlgebra<Rational>::from_tensor(bracket00); }
    LieRep<Rational> degree1_rep() const {
        LieRep<Rational> r(degree0(), dim1);
        r.action = bracket01;
        return r;
    }

    std::vector<Rational> b00(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        return bracket00.apply2(x, y);
    }
    std::vector<Rational> b01(const std::vector<Rational>& x, const std::vector<Rational>& v) const {
        return bracket01.apply2(x, v);
    }
    std::vector<Rational> m3(const std::vector<Rational>& x, const std::vector<Rational>& y,
                             const std::vector<Rational>& z) const {
        std::vector<Rational> out(dim1, Rational(0));
        for (int i = 0; i < dim0; ++i) {
            if (is_zero(x[i])) continue;
            for (int j = 0; j < dim0; ++j) {
                if (is_zero(y[j])) continue;
                for (int k = 0; k < dim0; ++k) {
                    if (is_zero(z[k])) continue;
                    std::vector<int> idx{i, j, k};
                    mu3.accumulate(idx, x[i] * y[j] * z[k], out);
                }
            }
        }
        return out;
    }

    friend bool operator==(const TwoTermLInfinity& a, const TwoTermLInfinity& b) {
        return a.dim0 == b.dim0 && a.dim1 == b.dim1 && a.mu1 == b.mu1 && a.bracket00 == b.bracket00 &&
               a.bracket01 == b.bracket01 && a.mu3 == b.mu3;
    }
};

// (V1 -0-> g, [,], θ) from a Lie algebra, a representation and a trilinear map
inline TwoTermLInfinity skeletal_from(const LieAlgebra<Rational>& g, const LieRep<Rational>& rep,
                                      const SkewMultiMap<Rational>& theta) {
    TwoTermLInfinity t(g.dim(), rep.space_dim);
    t.bracket00 = g.structure();
    t.bracket01 = rep.action;
    t.mu3 = theta;
    t.check_shapes();
    return t;
}

namespace detail {
inline std::vector<Rational> e(int n, int i) { return unit_vector<Rational>(n, i); }
inline void check_zero(CheckResult& c, const std::string& where, const std::vector<Rational>& res) {
    ++c.evaluated;
    if (!all_zero(res)) c.record(where, vec_to_string(res));
}
} // namespace detail

inline ValidationReport validate_two_term(const TwoTermLInfinity& t) {
    t.check_shapes();
    using detail::e;
    const int a = t.dim0, b = t.dim1;
    auto mu1 = [&](const std::vector<Rational>& v) { return t.mu1.apply(v); };
    ValidationReport rep;
    rep.subject = "2-term L-infinity algebra";
    CheckResult c1{"mu1[x,v] = [x,mu1 v]", "(i)", 0, 0, {}};
    for (int i = 0; i < a; ++i)
        for (int v = 0; v < b; ++v)
            detail::check_zero(c1, idx_str({{"x", i}, {"v", v}}), mu1(t.b01(e(a, i), e(b, v))) - t.b00(e(a, i), mu1(e(b, v))));
    CheckResult c2{"[mu1 u,v] = [u,mu1 v]", "(ii)", 0, 0, {}};
    for (int u = 0; u < b; ++u)
        for (int v = 0; v < b; ++v) {
            // [u, mu1 v] = -[mu1 v, u]
            auto res = t.b01(mu1(e(b, u)), e(b, v)) + t.b01(mu1(e(b, v)), e(b, u));
            detail::check_zero(c2, idx_str({{"u", u}, {"v", v}}), res);
        }
    CheckResult c3{"mu1 mu3 = Jacobiator", "(iii)", 0, 0, {}};
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j)
            for (int k = j + 1; k < a; ++k) {
                auto x = e(a, i), y = e(a, j), z = e(a, k);
                auto jac = t.b00(x, t.b00(y, z)) + t.b00(y, t.b00(z, x)) + t.b00(z, t.b00(x, y));
                detail::check_zero(c3, idx_str({{"x", i}, {"y", j}, {"z", k}}), mu1(t.m3(x, y, z)) - jac);
            }
    CheckResult c4{"mu3(x,y,mu1 v) = [x,[y,v]] + [y,[v,x]] + [v,[x,y]]", "(iv)", 0, 0, {}};
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j)
            for (int v = 0; v < b; ++v) {
                auto x = e(a, i), y = e(a, j), w = e(b, v);
                auto rhs = t.b01(x, t.b01(y, w)) - t.b01(y, t.b01(x, w)) - t.b01(t.b00(x, y), w);
                detail::check_zero(c4, idx_str({{"x", i}, {"y", j}, {"v", v}}), t.m3(x, y, mu1(w)) - rhs);
            }
    CheckResult c5{"mu3 is closed", "(v)", 0, 0, {}};
    for (const auto& s : subsets(a, 4)) {
        auto x = e(a, s[0]), y = e(a, s[1]), z = e(a, s[2]), w = e(a, s[3]);
        auto lhs = t.b01(x, t.m3(y, z, w)) - t.b01(y, t.m3(x, z, w)) + t.b01(z, t.m3(x, y, w)) - t.b01(w, t.m3(x, y, z));
        auto rhs = t.m3(t.b00(x, y), z, w) - t.m3(t.b00(x, z), y, w) + t.m3(t.b00(x, w), y, z) +
                   t.m3(t.b00(y, z), x, w) - t.m3(t.b00(y, w), x, z) + t.m3(t.b00(z, w), x, y);
        detail::check_zero(c5, idx_str({{"x", s[0]}, {"y", s[1]}, {"z", s[2]}, {"z'", s[3]}}), lhs - rhs);
    }
    rep.checks = {c1, c2, c3, c4, c5};
    return rep;
}

// representation V1 -0-> V0 of a skeletal algebra
struct SkeletalRep {
    int v0 = 0, v1 = 0;
    Tensor3<Rational> r00;  // g0 x V0 -> V0
    Tensor3<Rational> r01;  // g0 x V1 -> V1
    Tensor3<Rational> r10;  // g1 x V0 -> V1
    Tensor4 r3;             // g0 x g0 x V0 -> V1

    SkeletalRep() = default;
    SkeletalRep(const TwoTermLInfinity& t, int p0, int p1)
        : v0(p0), v1(p1), r00(t.dim0, p0, p0), r01(t.dim0, p1, p1), r10(t.dim1, p0, p1), r3(t.dim0, t.dim0, p0, p1) {}

    void check_shapes(const TwoTermLInfinity& t) const {
        if (!r00.same_shape(t.dim0, v0, v0) || !r01.same_shape(t.dim0, v1, v1) || !r10.same_shape(t.dim1, v0, v1) ||
            !r3.same_shape(t.dim0, t.dim0, v0, v1))
            fail(ErrorKind::MalformedTensor, "skeletal representation tensors have inconsistent shapes");
    }
    friend bool operator==(const SkeletalRep& a, const SkeletalRep& b) {
        return a.v0 == b.v0 && a.v1 == b.v1 && a.r00 == b.r00 && a.r01 == b.r01 && a.r10 == b.r10 && a.r3 == b.r3;
    }
};

inline SkeletalRep skeletal_adjoint(const TwoTermLInfinity& t) {
    SkeletalRep r(t, t.dim0, t.dim1);
    r.r00 = t.bracket00;
    r.r01 = t.bracket01;
    // [u, y] = -[y, u]
    for (int u = 0; u < t.dim1; ++u)
        for (int y = 0; y < t.dim0; ++y)
            for (int k = 0; k < t.dim1; ++k) r.r10(u, y, k) = -t.bracket01(y, u, k);
    for (int i = 0; i < t.dim0; ++i)
        for (int j = 0; j < t.dim0; ++j)
            for (int k = 0; k < t.dim0; ++k) {
                auto v = t.m3(detail::e(t.dim0, i), detail::e(t.dim0, j), detail::e(t.dim0, k));
                for (int l = 0; l < t.dim1; ++l) r.r3(i, j, k, l) = v[l];
            }
    return r;
}

inline ValidationReport validate_skeletal_rep(const TwoTermLInfinity& t, const SkeletalRep& r,
                                              const std::string& prefix = "") {
    t.check_shapes();
    r.check_shapes(t);
    using detail::e;
    const int a = t.dim0, p0 = r.v0, p1 = r.v1;
    ValidationReport rep;
    rep.subject = "skeletal representation";
    CheckResult c1{prefix + "rho3 skew in the g0 slots", "(skel-rep1)", 0, 0, {}};
    for (int i = 0; i < a; ++i)
        for (int j = i; j < a; ++j)
            for (int v = 0; v < p0; ++v) {
                std::vector<Rational> res(p1);
                for (int l = 0; l < p1; ++l) res[l] = r.r3(i, j, v, l) + r.r3(j, i, v, l);
                detail::check_zero(c1, idx_str({{"x", i}, {"y", j}, {"v", v}}), res);
            }
    CheckResult c2{prefix + "rho2 represents g0 on V0", "(skel-rep2)", 0, 0, {}};
    CheckResult c3{prefix + "rho2 represents g0 on V1", "(skel-rep3)", 0, 0, {}};
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            auto x = e(a, i), y = e(a, j);
            for (int v = 0; v < p0; ++v) {
                auto w = e(p0, v);
                detail::check_zero(c2, idx_str({{"x", i}, {"y", j}, {"v", v}}),
                                   r.r00.apply2(x, r.r00.apply2(y, w)) - r.r00.apply2(y, r.r00.apply2(x, w)) -
                                       r.r00.apply2(t.b00(x, y), w));
            }
            for (int v = 0; v < p1; ++v) {
                auto w = e(p1, v);
                detail::check_zero(c3, idx_str({{"x", i}, {"y", j}, {"v", v}}),
                                   r.r01.apply2(x, r.r01.apply2(y, w)) - r.r01.apply2(y, r.r01.apply2(x, w)) -
                                       r.r01.apply2(t.b00(x, y), w));
            }
        }
    CheckResult c4{prefix + "rho3 against mu3", "(skel-rep4)", 0, 0, {}};
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            for (int k = 0; k < a; ++k)
                for (int v = 0; v < p0; ++v) {
                    auto x = e(a, i), y = e(a, j), z = e(a, k), w = e(p0, v);
                    auto R3 = [&](const std::vector<Rational>& p, const std::vector<Rational>& q,
                                  const std::vector<Rational>& s) { return r.r3.apply3(p, q, s); };
                    auto lhs = r.r01.apply2(x, R3(y, z, w)) - r.r01.apply2(y, R3(x, z, w)) + r.r01.apply2(z, R3(x, y, w)) +
                               r.r10.apply2(t.m3(x, y, z), w);
                    auto rhs = R3(t.b00(x, y), z, w) - R3(t.b00(x, z), y, w) + R3(y, z, r.r00.apply2(x, w)) +
                               R3(t.b00(y, z), x, w) - R3(x, z, r.r00.apply2(y, w)) + R3(x, y, r.r00.apply2(z, w));
                    detail::check_zero(c4, idx_str({{"x", i}, {"y", j}, {"z", k}, {"v", v}}), lhs - rhs);
                }
    rep.checks = {c1, c2, c3, c4};
    return rep;
}

struct SkeletalMatchedPair {
    TwoTermLInfinity G, H;
    SkeletalRep rho;  // G on H: V0 = h0, V1 = h1
    SkeletalRep psi;  // H on G: V0 = g0, V1 = g1

    void check_shapes() const {
        G.check_shapes();
        H.check_shapes();
        if (rho.v0 != H.dim0 || rho.v1 != H.dim1 || psi.v0 != G.dim0 || psi.v1 != G.dim1)
            fail(ErrorKind::MalformedTensor, "actions do not match the algebras");
        rho.check_shapes(G);
        psi.check_shapes(H);
    }
    friend bool operator==(const SkeletalMatchedPair& a, const SkeletalMatchedPair& b) {
        return a.G == b.G && a.H == b.H && a.rho == b.rho && a.psi == b.psi;
    }
};

inline ValidationReport validate_skeletal_matched_pair(const SkeletalMatchedPair& s) {
    s.check_shapes();
    using detail::e;
    const auto &G = s.G, &H = s.H;
    const int a0 = G.dim0, a1 = G.dim1, b0 = H.dim0, b1 = H.dim1;
    ValidationReport rep;
    rep.subject = "matched pair of skeletal L-infinity algebras";

    CheckResult sk{"both sides skeletal", "", 2, 0, {}};
    if (!G.skeletal()) sk.record("G", "mu1 != 0");
    if (!H.skeletal()) sk.record("H", "mu1 != 0");
    rep.checks.push_back(sk);
    auto tg = validate_two_term(G);
    for (auto& c : tg.checks) c.name = "G: " + c.name;
    rep.append(tg);
    auto th = validate_two_term(H);
    for (auto& c : th.checks) c.name = "H: " + c.name;
    rep.append(th);
    rep.append(validate_skeletal_rep(G, s.rho, "rho: "));
    rep.append(validate_skeletal_rep(H, s.psi, "psi: "));

    // level 0 is an ordinary matched pair
    MatchedPair<Rational> level0(LieAlgebra<Rational>::from_tensor(G.bracket00), LieAlgebra<Rational>::from_tensor(H.bracket00),
                                 s.rho.r00, s.psi.r00);
    auto c11 = compat_rho_check(level0);
    c11.name = "level 0: " + c11.name;
    auto c22 = compat_psi_check(level0);
    c22.name = "level 0: " + c22.name;
    rep.checks.push_back(c11);
    rep.checks.push_back(c22);

    auto rho00 = [&](const std::vector<Rational>& x, const std::vector<Rational>& h) { return s.rho.r00.apply2(x, h); };
    auto rho01 = [&](const std::vector<Rational>& x, const std::vector<Rational>& w) { return s.rho.r01.apply2(x, w); };
    auto rho10 = [&](const std::vector<Rational>& v, const std::vector<Rational>& h) { return s.rho.r10.apply2(v, h); };
    auto psi00 = [&](const std::vector<Rational>& h, const std::vector<Rational>& x) { return s.psi.r00.apply2(h, x); };
    auto psi01 = [&](const std::vector<Rational>& h, const std::vector<Rational>& v) { return s.psi.r01.apply2(h, v); };
    auto psi10 = [&](const std::vector<Rational>& w, const std::vector<Rational>& x) { return s.psi.r10.apply2(w, x); };
    auto rho3 = [&](const std::vector<Rational>& x, const std::vector<Rational>& y, const std::vector<Rational>& h) {
        return s.rho.r3.apply3(x, y, h);
    };
    auto psi3 = [&](const std::vector<Rational>& h, const std::vector<Rational>& k, const std::vector<Rational>& x) {
        return s.psi.r3.apply3(h, k, x);
    };

    CheckResult p1{"rho2([x,v],h)", "(skew-l-repp1)", 0, 0, {}};
    for (int i = 0; i < a0; ++i)
        for (int v = 0; v < a1; ++v)
            for (int c = 0; c < b0; ++c) {
                auto x = e(a0, i), vv = e(a1, v), h = e(b0, c);
                detail::check_zero(p1, idx_str({{"x", i}, {"v", v}, {"h", c}}),
                                   rho10(G.b01(x, vv), h) - rho01(x, rho10(vv, h)) + rho10(vv, rho00(x, h)));
            }
    CheckResult p2{"psi2([h,w],x)", "(skew-l-repp2)", 0, 0, {}};
    for (int c = 0; c < b0; ++c)
        for (int w = 0; w < b1; ++w)
            for (int i = 0; i < a0; ++i) {
                auto h = e(b0, c), ww = e(b1, w), x = e(a0, i);
                detail::check_zero(p2, idx_str({{"h", c}, {"w", w}, {"x", i}}),
                                   psi10(H.b01(h, ww), x) - psi01(h, psi10(ww, x)) + psi10(ww, psi00(h, x)));
            }
    CheckResult p3{"rho2(x,[h,w])", "(skew-l-repp3)", 0, 0, {}};
    for (int i = 0; i < a0; ++i)
        for (int c = 0; c < b0; ++c)
            for (int w = 0; w < b1; ++w) {
                auto x = e(a0, i), h = e(b0, c), ww = e(b1, w);
                auto rhs = H.b01(rho00(x, h), ww) + H.b01(h, rho01(x, ww)) + rho10(psi10(ww, x), h) - rho01(psi00(h, x), ww);
                detail::check_zero(p3, idx_str({{"x", i}, {"h", c}, {"w", w}}), rho01(x, H.b01(h, ww)) - rhs);
            }
    CheckResult p4{"rho2(v,[h,k])", "(skew-l-repp4)", 0, 0, {}};
    for (int v = 0; v < a1; ++v)
        for (int c = 0; c < b0; ++c)
            for (int d = 0; d < b0; ++d) {
                auto vv = e(a1, v), h = e(b0, c), k = e(b0, d);
                // [ρ2(v,h), k] = -[k, ρ2(v,h)]
                auto rhs = H.b01(h, rho10(vv, k)) - H.b01(k, rho10(vv, h)) + rho10(psi01(k, vv), h) - rho10(psi01(h, vv), k);
                detail::check_zero(p4, idx_str({{"v", v}, {"h", c}, {"k", d}}), rho10(vv, H.b00(h, k)) - rhs);
            }
    CheckResult p5{"psi2(h,[x,v])", "(skew-l-repp5)", 0, 0, {}};
    for (int c = 0; c < b0; ++c)
        for (int i = 0; i < a0; ++i)
            for (int v = 0; v < a1; ++v) {
                auto h = e(b0, c), x = e(a0, i), vv = e(a1, v);
                auto rhs = G.b01(psi00(h, x), vv) + G.b01(x, psi01(h, vv)) + psi10(rho10(vv, h), x) - psi01(rho00(x, h), vv);
                detail::check_zero(p5, idx_str({{"h", c}, {"x", i}, {"v", v}}), psi01(h, G.b01(x, vv)) - rhs);
            }
    CheckResult p6{"psi2(w,[x,y])", "(skew-l-repp6)", 0, 0, {}};
    for (int w = 0; w < b1; ++w)
        for (int i = 0; i < a0; ++i)
            for (int j = 0; j < a0; ++j) {
                auto ww = e(b1, w), x = e(a0, i), y = e(a0, j);
                // [ψ2(w,x), y] = -[y, ψ2(w,x)]
                auto rhs = G.b01(x, psi10(ww, y)) - G.b01(y, psi10(ww, x)) + psi10(rho01(y, ww), x) - psi10(rho01(x, ww), y);
                detail::check_zero(p6, idx_str({{"w", w}, {"x", i}, {"y", j}}), psi10(ww, G.b00(x, y)) - rhs);
            }
    rep.checks.insert(rep.checks.end(), {p1, p2, p3, p4, p5, p6});

    CheckResult s1{"psi3 against the g side", "(skel1)", 0, 0, {}};
    for (int i = 0; i < a0; ++i)
        for (int j = 0; j < a0; ++j)
            for (int c = 0; c < b0; ++c)
                for (int d = 0; d < b0; ++d) {
                    auto x = e(a0, i), y = e(a0, j), h = e(b0, c), k = e(b0, d);
                    auto res = G.b01(x, psi3(h, k, y)) - G.b01(y, psi3(h, k, x)) - psi3(h, k, G.b00(x, y)) -
                               psi3(rho00(x, h), k, y) + psi3(rho00(x, k), h, y) + psi3(rho00(y, h), k, x) -
                               psi3(rho00(y, k), h, x);
                    detail::check_zero(s1, idx_str({{"x", i}, {"y", j}, {"h", c}, {"k", d}}), res);
                }
    CheckResult s2{"nu3 against rho2", "(skel2)", 0, 0, {}};
    for (int i = 0; i < a0; ++i)
        for (int c = 0; c < b0; ++c)
            for (int d = 0; d < b0; ++d)
                for (int f = 0; f < b0; ++f) {
                    auto x = e(a0, i), h = e(b0, c), k = e(b0, d), k2 = e(b0, f);
                    auto res = rho01(x, H.m3(h, k, k2)) + rho10(psi3(k, k2, x), h) - rho10(psi3(h, k2, x), k) +
                               rho10(psi3(h, k, x), k2) - H.m3(rho00(x, h), k, k2) + H.m3(rho00(x, k), h, k2) -
                               H.m3(rho00(x, k2), h, k);
                    detail::check_zero(s2, idx_str({{"x", i}, {"h", c}, {"k", d}, {"k'", f}}), res);
                }
    CheckResult s3{"rho3 against the h side", "(skel3)", 0, 0, {}};
    for (int c = 0; c < b0; ++c)
        for (int d = 0; d < b0; ++d)
            for (int i = 0; i < a0; ++i)
                for (int j = 0; j < a0; ++j) {
                    auto h = e(b0, c), k = e(b0, d), x = e(a0, i), y = e(a0, j);
                    auto res = H.b01(h, rho3(x, y, k)) - H.b01(k, rho3(x, y, h)) - rho3(x, y, H.b00(h, k)) -
                               rho3(psi00(h, x), y, k) + rho3(psi00(h, y), x, k) + rho3(psi00(k, x), y, h) -
                               rho3(psi00(k, y), x, h);
                    detail::check_zero(s3, idx_str({{"h", c}, {"k", d}, {"x", i}, {"y", j}}), res);
                }
    CheckResult s4{"mu3 against psi2", "(skel4)", 0, 0, {}};
    for (int c = 0; c < b0; ++c)
        for (int i = 0; i < a0; ++i)
            for (int j = 0; j < a0; ++j)
                for (int l = 0; l < a0; ++l) {
                    auto h = e(b0, c), x = e(a0, i), y = e(a0, j), z = e(a0, l);
                    auto res = psi01(h, G.m3(x, y, z)) + psi10(rho3(y, z, h), x) - psi10(rho3(x, z, h), y) +
                               psi10(rho3(x, y, h), z) - G.m3(psi00(h, x), y, z) + G.m3(psi00(h, y), x, z) -
                               G.m3(psi00(h, z), x, y);
                    detail::check_zero(s4, idx_str({{"h", c}, {"x", i}, {"y", j}, {"z", l}}), res);
                }
    rep.checks.insert(rep.checks.end(), {s1, s2, s3, s4});
    return rep;
}

// ((g0,h0,ρ2,ψ2), (g1,h1,...), (μ3⋉ρ3, 0, ψ3⋊ν3))
struct SkeletalTriple {
    MatchedPair<Rational> mp;
    MPRepresentation<Rational> rep;
    MPCochain<Rational> cocycle;
};

inline SkeletalTriple skeletal_to_triple_unchecked(const SkeletalMatchedPair& s) {
    s.check_shapes();
    const auto &G = s.G, &H = s.H;
    const int m = G.dim0, n = H.dim0, p = G.dim1, q = H.dim1;
    SkeletalTriple t;
    t.mp = MatchedPair<Rational>(LieAlgebra<Rational>::from_tensor(G.bracket00), LieAlgebra<Rational>::from_tensor(H.bracket00),
                                 s.rho.r00, s.psi.r00);
    MPRepresentation<Rational> r(t.mp, p, q);
    r.rho_V = G.bracket01;
    r.psi_V = s.psi.r01;
    r.rho_W = s.rho.r01;
    r.psi_W = H.bracket01;
    r.alpha = s.rho.r10;  // α_v h = ρ2(v,h)
    r.beta = s.psi.r10;   // β_w x = ψ2(w,x)
    t.rep = r;
    t.cocycle = MPCochain<Rational>::zero(m, n, p, q, 3);
    auto& c1 = t.cocycle.piece(1);
    auto& c3 = t.cocycle.piece(3);
    c1.V.coefficients() = G.mu3.coefficients();
    for (const auto& gs : subsets(m, 2))
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < q; ++l) c1.W.at(gs, std::vector<int>{k}, l) = s.rho.r3(gs[0], gs[1], k, l);
    for (int i = 0; i < m; ++i)
        for (const auto& hs : subsets(n, 2))
            for (int l = 0; l < p; ++l) c3.V.at(std::vector<int>{i}, hs, l) = s.psi.r3(hs[0], hs[1], i, l);
    c3.W.coefficients() = H.mu3.coefficients();
    return t;
}

inline SkeletalTriple skeletal_to_triple(const SkeletalMatchedPair& s) {
    auto v = validate_skeletal_matched_pair(s);
    if (!v.valid()) fail(ErrorKind::InvalidInput, "not a matched pair of skeletal algebras:\n" + v.to_text());
    return skeletal_to_triple_unchecked(s);
}

// reads the data off without checking closedness
inline SkeletalMatchedPair triple_to_skeletal_unchecked(const SkeletalTriple& t) {
    const auto& r = t.rep;
    const auto& F = t.cocycle;
    check_cochain(r, F);
    if (F.degree != 3) fail(ErrorKind::ArityMismatch, "skeletal data come from 3-cochains");
    const auto& mid = F.piece(2);
    if (!mid.V.is_zero() || !mid.W.is_zero())
        fail(ErrorKind::NonzeroMiddleComponent, "the middle component of the 3-cocycle is not zero");
    const int m = t.mp.m(), n = t.mp.n(), p = r.p, q = r.q;
    SkeletalMatchedPair s;
    s.G = TwoTermLInfinity(m, p);
    s.H = TwoTermLInfinity(n, q);
    s.G.bracket00 = t.mp.g.structure();
    s.G.bracket01 = r.rho_V;
    s.H.bracket00 = t.mp.h.structure();
    s.H.bracket01 = r.psi_W;
    const auto& c1 = F.piece(1);
    const auto& c3 = F.piece(3);
    s.G.mu3.coefficients() = c1.V.coefficients();
    s.H.mu3.coefficients() = c3.W.coefficients();
    s.rho = SkeletalRep(s.G, n, q);
    s.rho.r00 = t.mp.rho;
    s.rho.r01 = r.rho_W;
    s.rho.r10 = r.alpha;
    s.psi = SkeletalRep(s.H, m, p);
    s.psi.r00 = t.mp.psi;
    s.psi.r01 = r.psi_V;
    s.psi.r10 = r.beta;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                auto w = c1.W.eval(std::vector<int>{i, j}, std::vector<int>{k});
                for (int l = 0; l < q; ++l) s.rho.r3(i, j, k, l) = w[l];
            }
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            for (int i = 0; i < m; ++i) {
                auto v = c3.V.eval(std::vector<int>{i}, std::vector<int>{a, b});
                for (int l = 0; l < p; ++l) s.psi.r3(a, b, i, l) = v[l];
            }
        }
    return s;
}

inline SkeletalMatchedPair triple_to_skeletal(const SkeletalTriple& t) {
    auto s = triple_to_skeletal_unchecked(t);
    if (!delta_mpl_coeff(t.rep, t.cocycle).is_zero()) fail(ErrorKind::NotACocycle, "the 3-cochain is not closed");
    return s;
}

// closed 3-cochains with vanishing middle component, as columns of flattened cochains
inline Matrix<Rational> skeletal_cocycle_basis(const MPRepresentation<Rational>& r) {
    const int m = r.m(), n = r.n(), p = r.p, q = r.q;
    auto z = MPCochain<Rational>::zero(m, n, p, q, 3);
    const std::size_t N = z.dim();
    std::vector<std::size_t> free;
    std::size_t off = 0;
    for (const auto& pc : z.pieces) {
        std::size_t len = pc.V.coefficients().size() + pc.W.coefficients().size();
        if (pc.r != 2)
            for (std::size_t i = 0; i < len; ++i) free.push_back(off + i);
        off += len;
    }
    Matrix<Rational> embed(N, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) embed(free[j], j) = 1;
    auto K = kernel_basis(coboundary_matrix(r, 3) * embed);
    return embed * K;
}

} // namespace mpla
