#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace mpla {

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<S> column(std::size_t j) const {
        std::vector<S> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const std::vector<S>& c) {
        if (c.size() != rows_) fail(ErrorKind::DimensionMismatch, "column length");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const S& x : data_)
            if (!mpla::is_zero(x)) return false;
        return true;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector product");
        std::vector<S> out(rows_, S(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!mpla::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& x = a(i, k);
                if (mpla::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix difference");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

template <class S>
std::vector<S> operator+(std::vector<S> a, const std::vector<S>& b) {
    if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sum");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class S>
std::vector<S> operator-(std::vector<S> a, const std::vector<S>& b) {
    if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector difference");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class S>
bool all_zero(const std::vector<S>& v) {
    for (const S& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class S>
std::string vec_to_string(const std::vector<S>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

// dense 3-index tensor, used for brackets c[i][j][k] and actions a[i][p][q]
template <class S>
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int d0, int d1, int d2)
        : d0_(d0), d1_(d1), d2_(d2), data_(static_cast<std::size_t>(d0) * d1 * d2, S(0)) {
        if (d0 < 0 || d1 < 0 || d2 < 0) fail(ErrorKind::MalformedTensor, "negative tensor dimension");
    }
    int d0() const { return d0_; }
    int d1() const { return d1_; }
    int d2() const { return d2_; }
    S& operator()(int i, int j, int k) { return data_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k]; }
    const S& operator()(int i, int j, int k) const {
        return data_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k];
    }
    bool same_shape(int a, int b, int c) const { return d0_ == a && d1_ == b && d2_ == c; }
    std::vector<S>& data() { return data_; }
    const std::vector<S>& data() const { return data_; }
    bool is_zero() const {
        for (const S& x : data_)
            if (!mpla::is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const Tensor3& x, const Tensor3& y) {
        return x.d0_ == y.d0_ && x.d1_ == y.d1_ && x.d2_ == y.d2_ && x.data_ == y.data_;
    }
    friend Tensor3 operator+(Tensor3 x, const Tensor3& y) {
        if (!x.same_shape(y.d0_, y.d1_, y.d2_)) fail(ErrorKind::DimensionMismatch, "tensor sum");
        for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] += y.data_[i];
        return x;
    }
    friend Tensor3 operator-(Tensor3 x, const Tensor3& y) {
        if (!x.same_shape(y.d0_, y.d1_, y.d2_)) fail(ErrorKind::DimensionMismatch, "tensor difference");
        for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] -= y.data_[i];
        return x;
    }
    Tensor3 scaled(const S& c) const {
        Tensor3 t = *this;
        for (auto& x : t.data_) x = x * c;
        return t;
    }
    // contraction over the last two slots: sum_j v[j] T(i,j,.) for fixed i
    std::vector<S> apply(int i, const std::vector<S>& v) const {
        std::vector<S> out(d2_, S(0));
        for (int j = 0; j < d1_; ++j) {
            if (mpla::is_zero(v[j])) continue;
            for (int k = 0; k < d2_; ++k) out[k] += v[j] * (*this)(i, j, k);
        }
        return out;
    }
    // sum_{i,j} x[i] y[j] T(i,j,.)
    std::vector<S> apply2(const std::vector<S>& x, const std::vector<S>& y) const {
        std::vector<S> out(d2_, S(0));
        for (int i = 0; i < d0_; ++i) {
            if (mpla::is_zero(x[i])) continue;
            for (int j = 0; j < d1_; ++j) {
                if (mpla::is_zero(y[j])) continue;
                S c = x[i] * y[j];
                for (int k = 0; k < d2_; ++k) out[k] += c * (*this)(i, j, k);
            }
        }
        return out;
    }
    template <class F>
    Tensor3<F> convert() const {
        Tensor3<F> t(d0_, d1_, d2_);
        for (int i = 0; i < d0_; ++i)
            for (int j = 0; j < d1_; ++j)
                for (int k = 0; k < d2_; ++k) t(i, j, k) = F((*this)(i, j, k));
        return t;
    }

private:
    int d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<S> data_;
};

template <class S>
std::vector<S> unit_vector(int n, int i) {
    std::vector<S> v(n, S(0));
    v[i] = S(1);
    return v;
}

} // namespace mpla
