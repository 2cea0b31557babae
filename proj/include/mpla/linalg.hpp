#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace mpla {

// Fraction-free (Bareiss) elimination after clearing each row's denominators.
inline std::size_t rank(const Matrix<Rational>& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

inline std::size_t kernel_dim(const Matrix<Rational>& a) { return a.cols() - rank(a); }

// dim ker(d_out) - rank(d_in), where d_in : C^{n-1} -> C^n and d_out : C^n -> C^{n+1}
inline std::size_t cohomology_dim(const Matrix<Rational>& d_out, const Matrix<Rational>& d_in) {
    if (d_out.cols() != d_in.rows())
        fail(ErrorKind::DimensionMismatch, "cols(d_out)=" + std::to_string(d_out.cols()) +
                                               " but rows(d_in)=" + std::to_string(d_in.rows()));
    if (d_out.rows() > 0 && d_in.cols() > 0 && !(d_out * d_in).is_zero())
        fail(ErrorKind::NotAComplex, "d_out * d_in != 0");
    return kernel_dim(d_out) - rank(d_in);
}

struct RowEchelon {
    Matrix<Rational> r;
    std::vector<std::size_t> pivots;
};

inline RowEchelon rref(Matrix<Rational> m) {
    RowEchelon out;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.r = std::move(m);
    return out;
}

// columns form a basis of ker(a)
inline Matrix<Rational> kernel_basis(const Matrix<Rational>& a) {
    RowEchelon e = rref(a);
    const std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix<Rational> k(cols, free.size());
    for (std::size_t t = 0; t < free.size(); ++t) {
        k(free[t], t) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], t) = -e.r(i, free[t]);
    }
    return k;
}

// some x with a x = b, if one exists
inline std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) fail(ErrorKind::DimensionMismatch, "solve: rhs length");
    Matrix<Rational> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.r(i, a.cols());
    return x;
}

inline Matrix<Rational> inverse(const Matrix<Rational>& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<Rational> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    RowEchelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorKind::InvalidInput, "matrix is singular");
    Matrix<Rational> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.r(i, n + j);
    return inv;
}

} // namespace mpla
