#pragma once

#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "skew_map.hpp"
#include "validation.hpp"

namespace mpla {

template <class S>
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(int dim) : dim_(dim), c_(dim, dim, dim) {}

    static LieAlgebra abelian(int dim) { return LieAlgebra(dim); }

    static LieAlgebra from_tensor(const Tensor3<S>& t) {
        if (t.d0() != t.d1() || t.d1() != t.d2()) fail(ErrorKind::MalformedTensor, "bracket tensor is not n x n x n");
        LieAlgebra g(t.d0());
        for (int i = 0; i < g.dim_; ++i)
            for (int j = 0; j < g.dim_; ++j)
                for (int k = 0; k < g.dim_; ++k) {
                    if (!(t(i, j, k) == S(-t(j, i, k))))
                        fail(ErrorKind::MalformedTensor, "bracket not skew at (" + std::to_string(i) + "," +
                                                             std::to_string(j) + "," + std::to_string(k) + ")");
                    g.c_(i, j, k) = t(i, j, k);
                }
        return g;
    }

    static LieAlgebra from_map(const SkewMultiMap<S>& f) {
        if (f.arity() != 2 || f.domain_dim() != f.codomain_dim()) fail(ErrorKind::ArityMismatch, "bracket must be Λ²g -> g");
        LieAlgebra g(f.domain_dim());
        for (const auto& t : subsets(g.dim_, 2))
            for (int k = 0; k < g.dim_; ++k) g.set_bracket(t[0], t[1], k, f.at(t, k));
        return g;
    }

    int dim() const { return dim_; }

    // [e_i, e_j] has e_k-coefficient c; the skew partner is kept in sync
    void set_bracket(int i, int j, int k, const S& c) {
        check_index(i), check_index(j), check_index(k);
        if (i == j) {
            if (!is_zero(c)) fail(ErrorKind::MalformedTensor, "[e_i,e_i] must vanish");
            return;
        }
        c_(i, j, k) = c;
        c_(j, i, k) = -c;
    }

    const S& c(int i, int j, int k) const { return c_(i, j, k); }
    const Tensor3<S>& structure() const { return c_; }

    std::vector<S> bracket(const std::vector<S>& x, const std::vector<S>& y) const { return c_.apply2(x, y); }
    std::vector<S> bracket_basis(int i, int j) const {
        std::vector<S> v(dim_);
        for (int k = 0; k < dim_; ++k) v[k] = c_(i, j, k);
        return v;
    }

    SkewMultiMap<S> as_map() const {
        SkewMultiMap<S> f(2, dim_, dim_);
        for (const auto& t : subsets(dim_, 2))
            for (int k = 0; k < dim_; ++k) f.at(t, k) = c_(t[0], t[1], k);
        return f;
    }

    // matrix of ad_{e_i}
    Matrix<S> ad(int i) const {
        Matrix<S> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) m(k, j) = c_(i, j, k);
        return m;
    }

    template <class F>
    LieAlgebra<F> convert() const {
        LieAlgebra<F> g(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) g.set_bracket(i, j, k, F(c_(i, j, k)));
        return g;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_) fail(ErrorKind::MalformedTensor, "basis index " + std::to_string(i) + " out of range");
    }
    int dim_ = 0;
    Tensor3<S> c_;
};

// action(i,p,q): e_i . v_p has v_q-coefficient action(i,p,q)
template <class S>
struct LieRep {
    LieAlgebra<S> algebra;
    int space_dim = 0;
    Tensor3<S> action;

    LieRep() = default;
    LieRep(LieAlgebra<S> g, int n) : algebra(std::move(g)), space_dim(n), action(algebra.dim(), n, n) {}
    LieRep(LieAlgebra<S> g, Tensor3<S> a) : algebra(std::move(g)), space_dim(a.d1()), action(std::move(a)) {
        if (!action.same_shape(algebra.dim(), space_dim, space_dim))
            fail(ErrorKind::MalformedTensor, "action tensor shape does not match algebra and space");
    }

    std::vector<S> act(int i, const std::vector<S>& v) const { return action.apply(i, v); }
    std::vector<S> act(const std::vector<S>& x, const std::vector<S>& v) const { return action.apply2(x, v); }

    Matrix<S> matrix(int i) const {
        Matrix<S> m(space_dim, space_dim);
        for (int p = 0; p < space_dim; ++p)
            for (int q = 0; q < space_dim; ++q) m(q, p) = action(i, p, q);
        return m;
    }
};

template <class S>
LieRep<S> adjoint_rep(const LieAlgebra<S>& g) {
    return LieRep<S>(g, g.structure());
}

template <class S>
LieRep<S> trivial_rep(const LieAlgebra<S>& g, int n) {
    return LieRep<S>(g, n);
}

// derivation extension of an endomorphism to Λ^q, in the lex basis of increasing tuples
template <class S>
Matrix<S> wedge_derivation(const Matrix<S>& a, int q) {
    const int n = static_cast<int>(a.rows());
    const auto& tuples = subsets(n, q);
    Matrix<S> out(tuples.size(), tuples.size());
    std::vector<int> buf(q);
    for (std::size_t col = 0; col < tuples.size(); ++col) {
        const auto& t = tuples[col];
        for (int pos = 0; pos < q; ++pos)
            for (int k = 0; k < n; ++k) {
                const S& c = a(k, t[pos]);
                if (is_zero(c)) continue;
                for (int i = 0; i < q; ++i) buf[i] = t[i];
                buf[pos] = k;
                int sg = sort_sign(std::span<int>(buf));
                if (sg == 0) continue;
                std::size_t row = subset_rank(std::span<const int>(buf), n);
                if (sg > 0)
                    out(row, col) += c;
                else
                    out(row, col) -= c;
            }
    }
    return out;
}

template <class S>
LieRep<S> rep_from_matrices(const LieAlgebra<S>& g, const std::vector<Matrix<S>>& mats) {
    const int n = mats.empty() ? 0 : static_cast<int>(mats[0].rows());
    LieRep<S> r(g, n);
    for (int i = 0; i < g.dim(); ++i)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) r.action(i, p, q) = mats[i](q, p);
    return r;
}

// adjoint action extended to Λ^q g
template <class S>
LieRep<S> wedge_adjoint_rep(const LieAlgebra<S>& g, int q) {
    std::vector<Matrix<S>> mats;
    for (int i = 0; i < g.dim(); ++i) mats.push_back(wedge_derivation(g.ad(i), q));
    if (mats.empty()) return LieRep<S>(g, static_cast<int>(binomial(g.dim(), q)));
    return rep_from_matrices(g, mats);
}

template <class S>
std::string tuple_str(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

inline std::string idx_str(const std::vector<std::pair<std::string, int>>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].first + "=" + std::to_string(xs[i].second);
    return s + ")";
}

template <class S>
CheckResult jacobi_check(const LieAlgebra<S>& g, const std::string& name) {
    CheckResult r;
    r.name = name;
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                ++r.evaluated;
                auto ei = unit_vector<S>(n, i), ej = unit_vector<S>(n, j), ek = unit_vector<S>(n, k);
                auto res = g.bracket(g.bracket_basis(i, j), ek) + g.bracket(g.bracket_basis(j, k), ei) +
                           g.bracket(g.bracket_basis(k, i), ej);
                if (!all_zero(res)) r.record(idx_str({{"i", i}, {"j", j}, {"k", k}}), vec_to_string(res));
            }
    return r;
}

template <class S>
ValidationReport validate_lie_algebra(const LieAlgebra<S>& g) {
    ValidationReport rep;
    rep.subject = "lie algebra";
    rep.checks.push_back(jacobi_check(g, "Jacobi"));
    return rep;
}

// e_i e_j - e_j e_i = [e_i,e_j] acting on the space
template <class S>
CheckResult rep_law_check(const LieAlgebra<S>& g, const Tensor3<S>& action, const std::string& name) {
    CheckResult r;
    r.name = name;
    const int m = g.dim(), n = action.d1();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int p = 0; p < n; ++p) {
                ++r.evaluated;
                auto v = unit_vector<S>(n, p);
                auto lhs = action.apply(i, action.apply(j, v)) - action.apply(j, action.apply(i, v));
                auto rhs = action.apply2(g.bracket_basis(i, j), v);
                auto res = lhs - rhs;
                if (!all_zero(res)) r.record(idx_str({{"i", i}, {"j", j}, {"p", p}}), vec_to_string(res));
            }
    return r;
}

template <class S>
ValidationReport validate_lie_rep(const LieRep<S>& r) {
    ValidationReport rep;
    rep.subject = "lie representation";
    rep.checks.push_back(jacobi_check(r.algebra, "Jacobi"));
    rep.checks.push_back(rep_law_check(r.algebra, r.action, "representation law"));
    return rep;
}

// Chevalley–Eilenberg coboundary of f : Λ^n g -> V
template <class S>
SkewMultiMap<S> ce_coboundary(const LieRep<S>& r, const SkewMultiMap<S>& f) {
    const int m = r.algebra.dim();
    if (f.domain_dim() != m || f.codomain_dim() != r.space_dim)
        fail(ErrorKind::ArityMismatch, "cochain does not match the representation");
    const int n = f.arity();
    SkewMultiMap<S> out(n + 1, m, r.space_dim);
    const auto& tuples = subsets(m, n + 1);
    std::vector<int> rest(n);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& x = tuples[t];
        std::vector<S> acc(r.space_dim, S(0));
        for (int i = 0; i <= n; ++i) {
            for (int a = 0, b = 0; a <= n; ++a)
                if (a != i) rest[b++] = x[a];
            std::vector<S> fv = f.eval(rest);
            if (all_zero(fv)) continue;
            auto act = r.act(x[i], fv);
            if (i % 2 == 0)
                acc = acc + act;
            else
                acc = acc - act;
        }
        std::vector<int> args(n);
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                S sign = ((i + j) % 2 == 0) ? S(1) : S(-1);
                for (int k = 0; k < m; ++k) {
                    const S& c = r.algebra.c(x[i], x[j], k);
                    if (is_zero(c)) continue;
                    args[0] = k;
                    for (int a = 0, b = 1; a <= n; ++a)
                        if (a != i && a != j) args[b++] = x[a];
                    f.accumulate(args, sign * c, acc);
                }
            }
        for (int o = 0; o < r.space_dim; ++o) out.coeff(t, o) = acc[o];
    }
    return out;
}

// matrix of a linear operator on SkewMultiMap coordinates, built column by column
template <class S, class Op>
Matrix<S> operator_matrix(int arity, int dom, int cod, std::size_t out_size, Op&& op) {
    SkewMultiMap<S> proto(arity, dom, cod);
    const std::size_t cols = proto.size();
    Matrix<S> mat(out_size, cols);
    parallel_for(cols, [&](std::size_t j) {
        SkewMultiMap<S> e(arity, dom, cod);
        e.coefficients()[j] = S(1);
        std::vector<S> col = op(e);
        for (std::size_t i = 0; i < out_size; ++i) mat(i, j) = col[i];
    });
    return mat;
}

template <class S>
Matrix<S> ce_matrix(const LieRep<S>& r, int n) {
    const int m = r.algebra.dim();
    std::size_t out_size = binomial(m, n + 1) * r.space_dim;
    return operator_matrix<S>(n, m, r.space_dim, out_size,
                              [&](const SkewMultiMap<S>& e) { return ce_coboundary(r, e).coefficients(); });
}

inline std::vector<std::size_t> ce_cohomology_dims(const LieRep<Rational>& r, int max_degree) {
    std::vector<std::size_t> dims;
    const int m = r.algebra.dim();
    Matrix<Rational> prev(r.space_dim, 0);
    for (int n = 0; n <= max_degree; ++n) {
        Matrix<Rational> d = ce_matrix(r, n);
        dims.push_back(cohomology_dim(d, prev));
        prev = std::move(d);
    }
    (void)m;
    return dims;
}

// i_f g: g with f inserted in its first slot, summed over unshuffles
template <class S>
SkewMultiMap<S> insertion(const SkewMultiMap<S>& f, const SkewMultiMap<S>& g) {
    const int d = f.domain_dim();
    const int a = f.arity(), b = g.arity();
    if (a + b - 1 < 0) fail(ErrorKind::ArityMismatch, "insertion of two constants");
    SkewMultiMap<S> out(a + b - 1, d, d);
    if (b == 0) return out;
    const int n = a + b - 1;
    const auto& tuples = subsets(d, n);
    const auto& sh = shuffles(a, b - 1);
    std::vector<int> fargs(a), gargs(b);
    std::vector<S> acc(d);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& x = tuples[t];
        for (auto& v : acc) v = S(0);
        for (const auto& s : sh) {
            for (int i = 0; i < a; ++i) fargs[i] = x[s.first[i]];
            std::size_t fr = subset_rank(std::span<const int>(fargs), d);
            for (int i = 0; i < b - 1; ++i) gargs[i + 1] = x[s.second[i]];
            for (int c = 0; c < d; ++c) {
                const S& fc = f.coeff(fr, c);
                if (is_zero(fc)) continue;
                gargs[0] = c;
                g.accumulate(gargs, s.sign > 0 ? fc : S(-fc), acc);
            }
        }
        for (int o = 0; o < d; ++o) out.coeff(t, o) = acc[o];
    }
    return out;
}

// Nijenhuis–Richardson bracket; degree of a map is arity - 1
template <class S>
SkewMultiMap<S> nr_bracket(const SkewMultiMap<S>& f, const SkewMultiMap<S>& g) {
    if (f.domain_dim() != f.codomain_dim() || g.domain_dim() != g.codomain_dim() || f.domain_dim() != g.domain_dim())
        fail(ErrorKind::SpaceMismatch, "NR bracket needs maps on one common space");
    const long m = f.arity() - 1, n = g.arity() - 1;
    SkewMultiMap<S> out = insertion(f, g);
    SkewMultiMap<S> rev = insertion(g, f);
    if (parity_sign(m * n) > 0)
        out -= rev;
    else
        out += rev;
    return out;
}

} // namespace mpla
