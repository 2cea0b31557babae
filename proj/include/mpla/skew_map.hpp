#pragma once

#include <span>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace mpla {

// alternating multilinear map Λ^k(K^d) -> K^c, dense over increasing k-tuples
template <class S>
class SkewMultiMap {
public:
    SkewMultiMap() = default;
    SkewMultiMap(int arity, int domain_dim, int codomain_dim)
        : arity_(arity), dom_(domain_dim), cod_(codomain_dim) {
        if (arity < 0 || domain_dim < 0 || codomain_dim < 0) fail(ErrorKind::ArityMismatch, "negative arity or dimension");
        data_.assign(binomial(dom_, arity_) * cod_, S(0));
    }

    int arity() const { return arity_; }
    int domain_dim() const { return dom_; }
    int codomain_dim() const { return cod_; }
    std::size_t num_tuples() const { return binomial(dom_, arity_); }
    std::size_t size() const { return data_.size(); }

    S& coeff(std::size_t tuple_rank, int out) { return data_[tuple_rank * cod_ + out]; }
    const S& coeff(std::size_t tuple_rank, int out) const { return data_[tuple_rank * cod_ + out]; }

    // increasing tuple
    S& at(std::span<const int> sorted, int out) { return coeff(subset_rank(sorted, dom_), out); }
    const S& at(std::span<const int> sorted, int out) const { return coeff(subset_rank(sorted, dom_), out); }

    // out += coef * f(e_{idx_0}, ..., e_{idx_{k-1}}) for any index order
    void accumulate(std::span<const int> idx, const S& coef, std::vector<S>& out) const {
        if (static_cast<int>(idx.size()) != arity_) fail(ErrorKind::ArityMismatch, "evaluation arity");
        int buf[kMaxDim + 1];
        for (std::size_t i = 0; i < idx.size(); ++i) buf[i] = idx[i];
        std::span<int> s(buf, idx.size());
        int sg = sort_sign(s);
        if (sg == 0) return;
        std::size_t base = subset_rank(std::span<const int>(buf, idx.size()), dom_) * cod_;
        for (int o = 0; o < cod_; ++o) {
            const S& c = data_[base + o];
            if (mpla::is_zero(c)) continue;
            if (sg > 0)
                out[o] += coef * c;
            else
                out[o] -= coef * c;
        }
    }

    std::vector<S> eval(std::span<const int> idx) const {
        std::vector<S> out(cod_, S(0));
        accumulate(idx, S(1), out);
        return out;
    }

    std::vector<S>& coefficients() { return data_; }
    const std::vector<S>& coefficients() const { return data_; }

    bool is_zero() const {
        for (const S& x : data_)
            if (!mpla::is_zero(x)) return false;
        return true;
    }

    bool same_space(const SkewMultiMap& o) const { return arity_ == o.arity_ && dom_ == o.dom_ && cod_ == o.cod_; }

    SkewMultiMap& operator+=(const SkewMultiMap& o) {
        if (!same_space(o)) fail(ErrorKind::SpaceMismatch, "sum of maps in different spaces");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    SkewMultiMap& operator-=(const SkewMultiMap& o) {
        if (!same_space(o)) fail(ErrorKind::SpaceMismatch, "difference of maps in different spaces");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    SkewMultiMap& operator*=(const S& c) {
        for (auto& x : data_) x = x * c;
        return *this;
    }
    friend SkewMultiMap operator+(SkewMultiMap a, const SkewMultiMap& b) { return a += b; }
    friend SkewMultiMap operator-(SkewMultiMap a, const SkewMultiMap& b) { return a -= b; }
    friend SkewMultiMap operator-(SkewMultiMap a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend SkewMultiMap operator*(const S& c, SkewMultiMap a) { return a *= c; }
    friend bool operator==(const SkewMultiMap& a, const SkewMultiMap& b) {
        return a.same_space(b) && a.data_ == b.data_;
    }

    // first few nonzero coefficients, for reports
    std::string nonzero_summary(std::size_t limit = 4) const {
        std::string s;
        std::size_t shown = 0;
        const auto& tuples = subsets(dom_, arity_);
        for (std::size_t t = 0; t < tuples.size() && shown < limit; ++t)
            for (int o = 0; o < cod_ && shown < limit; ++o) {
                const S& c = coeff(t, o);
                if (mpla::is_zero(c)) continue;
                if (!s.empty()) s += " ";
                s += "(";
                for (std::size_t i = 0; i < tuples[t].size(); ++i) s += (i ? "," : "") + std::to_string(tuples[t][i]);
                s += ")->" + std::to_string(o) + ":" + to_string(c);
                ++shown;
            }
        return s;
    }

private:
    int arity_ = 0, dom_ = 0, cod_ = 0;
    std::vector<S> data_;
};

} // namespace mpla
