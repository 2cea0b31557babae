#pragma once

#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "lie.hpp"
#include "skew_map.hpp"
#include "validation.hpp"

namespace mpla {

// multilinear map Λ^a g ⊗ Λ^b h -> U, alternating in each group separately.
// negative a or b gives the zero space.
template <class S>
class BiTensor {
public:
    BiTensor() = default;
    BiTensor(int m, int n, int a, int b, int u) : m_(m), n_(n), a_(a), b_(b), u_(u) {
        data_.assign(binomial(m, a) * binomial(n, b) * static_cast<std::size_t>(u), S(0));
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int g_arity() const { return a_; }
    int h_arity() const { return b_; }
    int out_dim() const { return u_; }
    std::size_t size() const { return data_.size(); }
    std::size_t g_tuples() const { return binomial(m_, a_); }
    std::size_t h_tuples() const { return binomial(n_, b_); }

    S& coeff(std::size_t gr, std::size_t hr, int o) { return data_[(gr * h_tuples() + hr) * u_ + o]; }
    const S& coeff(std::size_t gr, std::size_t hr, int o) const { return data_[(gr * h_tuples() + hr) * u_ + o]; }

    S& at(std::span<const int> gs, std::span<const int> hs, int o) {
        return coeff(subset_rank(gs, m_), subset_rank(hs, n_), o);
    }
    const S& at(std::span<const int> gs, std::span<const int> hs, int o) const {
        return coeff(subset_rank(gs, m_), subset_rank(hs, n_), o);
    }

    // out += coef * F(g args in any order; h args in any order)
    void accumulate(std::span<const int> gi, std::span<const int> hi, const S& coef, std::vector<S>& out) const {
        if (data_.empty()) return;
        if (static_cast<int>(gi.size()) != a_ || static_cast<int>(hi.size()) != b_)
            fail(ErrorKind::ArityMismatch, "bi-tensor evaluation arity");
        int gb[kMaxDim + 1], hb[kMaxDim + 1];
        for (std::size_t i = 0; i < gi.size(); ++i) gb[i] = gi[i];
        for (std::size_t i = 0; i < hi.size(); ++i) hb[i] = hi[i];
        int sg = sort_sign(std::span<int>(gb, gi.size())) * sort_sign(std::span<int>(hb, hi.size()));
        if (sg == 0) return;
        std::size_t gr = subset_rank(std::span<const int>(gb, gi.size()), m_);
        std::size_t hr = subset_rank(std::span<const int>(hb, hi.size()), n_);
        for (int o = 0; o < u_; ++o) {
            const S& c = coeff(gr, hr, o);
            if (mpla::is_zero(c)) continue;
            if (sg > 0)
                out[o] += coef * c;
            else
                out[o] -= coef * c;
        }
    }

    std::vector<S> eval(std::span<const int> gi, std::span<const int> hi) const {
        std::vector<S> out(u_, S(0));
        accumulate(gi, hi, S(1), out);
        return out;
    }

    std::vector<S>& coefficients() { return data_; }
    const std::vector<S>& coefficients() const { return data_; }

    bool is_zero() const {
        for (const S& x : data_)
            if (!mpla::is_zero(x)) return false;
        return true;
    }
    bool same_space(const BiTensor& o) const {
        return m_ == o.m_ && n_ == o.n_ && u_ == o.u_ && (data_.empty() ? o.data_.empty() : (a_ == o.a_ && b_ == o.b_));
    }
    BiTensor& operator+=(const BiTensor& o) {
        if (!same_space(o)) fail(ErrorKind::SpaceMismatch, "bi-tensor sum");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    BiTensor& operator-=(const BiTensor& o) {
        if (!same_space(o)) fail(ErrorKind::SpaceMismatch, "bi-tensor difference");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    BiTensor& operator*=(const S& c) {
        for (auto& x : data_) x = x * c;
        return *this;
    }
    friend BiTensor operator+(BiTensor a, const BiTensor& b) { return a += b; }
    friend BiTensor operator-(BiTensor a, const BiTensor& b) { return a -= b; }
    friend bool operator==(const BiTensor& a, const BiTensor& b) { return a.same_space(b) && a.data_ == b.data_; }

    // visit every stored coefficient with its index tuples
    template <class Fn>
    void for_each(Fn&& fn) const {
        const auto& gt = subsets(m_, a_);
        const auto& ht = subsets(n_, b_);
        for (std::size_t i = 0; i < gt.size(); ++i)
            for (std::size_t j = 0; j < ht.size(); ++j)
                for (int o = 0; o < u_; ++o) fn(gt[i], ht[j], o, coeff(i, j, o));
    }

private:
    int m_ = 0, n_ = 0, a_ = 0, b_ = 0, u_ = 0;
    std::vector<S> data_;
};

// adds t into f, where f lives on g⊕h (g first) with codomain offset by `offset`
template <class S>
void add_embedded(const BiTensor<S>& t, int offset, SkewMultiMap<S>& f) {
    if (t.size() == 0) return;
    const int m = t.m();
    if (f.arity() != t.g_arity() + t.h_arity() || f.domain_dim() != m + t.n())
        fail(ErrorKind::SpaceMismatch, "embedding arity or dimension");
    std::vector<int> tuple(f.arity());
    t.for_each([&](const std::vector<int>& gs, const std::vector<int>& hs, int o, const S& c) {
        if (is_zero(c)) return;
        for (std::size_t i = 0; i < gs.size(); ++i) tuple[i] = gs[i];
        for (std::size_t i = 0; i < hs.size(); ++i) tuple[gs.size() + i] = hs[i] + m;
        f.at(tuple, offset + o) += c;
    });
}

// reads the (a g-slots, b h-slots) block of f into t
template <class S>
void extract_block(const SkewMultiMap<S>& f, int offset, BiTensor<S>& t) {
    if (t.size() == 0) return;
    const int m = t.m();
    std::vector<int> tuple(f.arity());
    const auto& gt = subsets(m, t.g_arity());
    const auto& ht = subsets(t.n(), t.h_arity());
    for (std::size_t i = 0; i < gt.size(); ++i)
        for (std::size_t j = 0; j < ht.size(); ++j) {
            for (std::size_t x = 0; x < gt[i].size(); ++x) tuple[x] = gt[i][x];
            for (std::size_t x = 0; x < ht[j].size(); ++x) tuple[gt[i].size() + x] = ht[j][x] + m;
            std::size_t r = subset_rank(std::span<const int>(tuple), f.domain_dim());
            for (int o = 0; o < t.out_dim(); ++o) t.coeff(i, j, o) = f.coeff(r, offset + o);
        }
}

// element of C^{k|l}: g-valued part on (k+1 | l) slots, h-valued part on (k | l+1) slots.
// cg, ch are the codomain dimensions (m, n for the adjoint case).
template <class S>
struct BidegreeMap {
    int k = 0, l = 0;
    BiTensor<S> part_g;
    BiTensor<S> part_h;

    BidegreeMap() = default;
    BidegreeMap(int m, int n, int k_, int l_, int cg, int ch)
        : k(k_), l(l_), part_g(m, n, k_ + 1, l_, cg), part_h(m, n, k_, l_ + 1, ch) {
        if (k_ < -1 || l_ < -1) fail(ErrorKind::ArityMismatch, "bidegree below -1");
    }

    int m() const { return part_g.m(); }
    int n() const { return part_g.n(); }
    int arity() const { return k + l + 1; }
    bool is_zero() const { return part_g.is_zero() && part_h.is_zero(); }

    friend bool operator==(const BidegreeMap& a, const BidegreeMap& b) {
        return a.k == b.k && a.l == b.l && a.part_g == b.part_g && a.part_h == b.part_h;
    }
    BidegreeMap& operator+=(const BidegreeMap& o) {
        if (k != o.k || l != o.l) fail(ErrorKind::SpaceMismatch, "bidegree sum");
        part_g += o.part_g;
        part_h += o.part_h;
        return *this;
    }
};

template <class S>
SkewMultiMap<S> embed(const BidegreeMap<S>& b) {
    const int cg = b.part_g.out_dim(), ch = b.part_h.out_dim();
    SkewMultiMap<S> f(b.arity(), b.m() + b.n(), cg + ch);
    add_embedded(b.part_g, 0, f);
    add_embedded(b.part_h, cg, f);
    return f;
}

template <class S>
struct Decomposition {
    std::vector<BidegreeMap<S>> components;  // k = N, N-1, ..., -1 where N = arity
    bool in_M = true;                        // the two -1 components vanish

    const BidegreeMap<S>& component(int k) const {
        for (const auto& c : components)
            if (c.k == k) return c;
        fail(ErrorKind::ArityMismatch, "no component with k=" + std::to_string(k));
    }
};

// splits f : Λ^N(g⊕h) -> G⊕H into bidegree pieces; codomain splits as cg + ch
template <class S>
Decomposition<S> decompose(const SkewMultiMap<S>& f, int m, int n, int cg, int ch) {
    if (f.domain_dim() != m + n || f.codomain_dim() != cg + ch)
        fail(ErrorKind::SpaceMismatch, "decomposition dimensions");
    const int N = f.arity();
    Decomposition<S> d;
    for (int k = N; k >= -1; --k) {
        int l = N - 1 - k;
        BidegreeMap<S> b(m, n, k, l, cg, ch);
        extract_block(f, 0, b.part_g);
        extract_block(f, cg, b.part_h);
        d.components.push_back(std::move(b));
    }
    // -1 components: k = N (only g-part: N+1 g slots, impossible, so h-part Λ^N g -> h) and k = -1
    for (const auto& c : d.components)
        if ((c.k == N || c.k == -1) && !c.is_zero()) d.in_M = false;
    return d;
}

// π = (μ⋉ρ, ψ⋊ν), the two bidegree components of a matched-pair structure
template <class S>
struct StructureElement {
    BidegreeMap<S> mu_rho;  // 1|0
    BidegreeMap<S> psi_nu;  // 0|1

    int m() const { return mu_rho.m(); }
    int n() const { return mu_rho.n(); }

    // bracket c_g on g, bracket c_h on h, rho(i,a,b): e_i.f_a, psi(a,i,j): f_a.e_i
    static StructureElement from_tensors(const Tensor3<S>& mu, const Tensor3<S>& nu, const Tensor3<S>& rho,
                                         const Tensor3<S>& psi) {
        const int m = mu.d0(), n = nu.d0();
        StructureElement pi;
        pi.mu_rho = BidegreeMap<S>(m, n, 1, 0, m, n);
        pi.psi_nu = BidegreeMap<S>(m, n, 0, 1, m, n);
        for (const auto& t : subsets(m, 2))
            for (int k = 0; k < m; ++k) pi.mu_rho.part_g.at(t, std::vector<int>{}, k) = mu(t[0], t[1], k);
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    pi.mu_rho.part_h.at(std::vector<int>{i}, std::vector<int>{a}, b) = rho(i, a, b);
                }
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < n; ++a)
                for (int j = 0; j < m; ++j) pi.psi_nu.part_g.at(std::vector<int>{i}, std::vector<int>{a}, j) = -psi(a, i, j);
        for (const auto& t : subsets(n, 2))
            for (int c = 0; c < n; ++c) pi.psi_nu.part_h.at(std::vector<int>{}, t, c) = nu(t[0], t[1], c);
        return pi;
    }

    SkewMultiMap<S> total() const { return embed(mu_rho) + embed(psi_nu); }
};

template <class S>
struct MCReport {
    SkewMultiMap<S> mu_rho_sq;   // [μ⋉ρ, μ⋉ρ]
    SkewMultiMap<S> mixed;       // [μ⋉ρ, ψ⋊ν]
    SkewMultiMap<S> psi_nu_sq;   // [ψ⋊ν, ψ⋊ν]

    bool is_mc() const { return mu_rho_sq.is_zero() && mixed.is_zero() && psi_nu_sq.is_zero(); }

    ValidationReport report() const {
        ValidationReport r;
        r.subject = "Maurer-Cartan";
        auto add = [&](const std::string& name, const SkewMultiMap<S>& f) {
            CheckResult c;
            c.name = name;
            c.evaluated = f.size();
            if (!f.is_zero()) c.record("nonzero coefficients", f.nonzero_summary());
            r.checks.push_back(c);
        };
        add("[mu+rho, mu+rho]", mu_rho_sq);
        add("[mu+rho, psi+nu]", mixed);
        add("[psi+nu, psi+nu]", psi_nu_sq);
        return r;
    }
};

template <class S>
MCReport<S> mc_check(const StructureElement<S>& pi) {
    auto a = embed(pi.mu_rho), b = embed(pi.psi_nu);
    return MCReport<S>{nr_bracket(a, a), nr_bracket(a, b), nr_bracket(b, b)};
}

} // namespace mpla
