#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "deform_ext.hpp"
#include "lie.hpp"
#include "matched_pair.hpp"
#include "mp_cohomology.hpp"
#include "mp_rep.hpp"
#include "skeletal.hpp"

namespace mpla::io {

using json = nlohmann::json;

// parse errors carry "<file>:<json path>"
[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
    fail(ErrorKind::ParseError, where + ": " + what);
}

inline json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) bad(path, "cannot open file");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(path == "-" ? "<stdin>" : path, e.what());
    }
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, "missing field \"" + key + "\"");
    return *it;
}

inline Rational rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (!j.is_string()) bad(where, "rational must be a \"p/q\" string or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        bad(where, e.detail());
    }
}

inline json rational_json(const Rational& r) { return json(to_string(r)); }

inline int index(const json& j, int bound, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "index must be an integer");
    long long v = j.get<long long>();
    if (v < 0 || v >= bound) bad(where, "index " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
    return static_cast<int>(v);
}

inline int nonneg(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
    return static_cast<int>(j.get<long long>());
}

inline const json& array(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    return j;
}

// [[i, j, k, "c"], ...]; repeated entries must agree
inline Tensor3<Rational> tensor3(const json& j, int d0, int d1, int d2, const std::string& where) {
    Tensor3<Rational> t(d0, d1, d2);
    std::vector<char> seen(static_cast<std::size_t>(d0) * d1 * d2, 0);
    array(j, where);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string w = where + "[" + std::to_string(e) + "]";
        const auto& row = j[e];
        if (!row.is_array() || row.size() != 4) bad(w, "expected [i, j, k, \"c\"]");
        int a = index(row[0], d0, w + "[0]"), b = index(row[1], d1, w + "[1]"), c = index(row[2], d2, w + "[2]");
        Rational v = rational(row[3], w + "[3]");
        std::size_t pos = (static_cast<std::size_t>(a) * d1 + b) * d2 + c;
        if (seen[pos] && t(a, b, c) != v) bad(w, "conflicting repeated entry");
        seen[pos] = 1;
        t(a, b, c) = v;
    }
    return t;
}

inline json tensor3_json(const Tensor3<Rational>& t) {
    json out = json::array();
    for (int a = 0; a < t.d0(); ++a)
        for (int b = 0; b < t.d1(); ++b)
            for (int c = 0; c < t.d2(); ++c)
                if (!is_zero(t(a, b, c))) out.push_back({a, b, c, rational_json(t(a, b, c))});
    return out;
}

// [[row, col, "c"], ...]
inline Matrix<Rational> matrix(const json& j, int rows, int cols, const std::string& where) {
    Matrix<Rational> M(rows, cols);
    array(j, where);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string w = where + "[" + std::to_string(e) + "]";
        const auto& row = j[e];
        if (!row.is_array() || row.size() != 3) bad(w, "expected [row, col, \"c\"]");
        M(index(row[0], rows, w + "[0]"), index(row[1], cols, w + "[1]")) = rational(row[2], w + "[2]");
    }
    return M;
}

inline json matrix_json(const Matrix<Rational>& M) {
    json out = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t k = 0; k < M.cols(); ++k)
            if (!is_zero(M(i, k))) out.push_back({i, k, rational_json(M(i, k))});
    return out;
}

inline LieAlgebra<Rational> lie_algebra(const json& j, const std::string& where) {
    const int n = nonneg(field(j, "dim", where), where + "/dim");
    const std::string wb = where + "/bracket";
    const auto& br = array(field(j, "bracket", where), wb);
    Tensor3<Rational> t(n, n, n);
    std::vector<char> seen(static_cast<std::size_t>(n) * n * n, 0);
    for (std::size_t e = 0; e < br.size(); ++e) {
        const std::string w = wb + "[" + std::to_string(e) + "]";
        const auto& row = br[e];
        if (!row.is_array() || row.size() != 4) bad(w, "expected [i, j, k, \"c\"]");
        int a = index(row[0], n, w + "[0]"), b = index(row[1], n, w + "[1]"), c = index(row[2], n, w + "[2]");
        Rational v = rational(row[3], w + "[3]");
        if (a == b) {
            if (!is_zero(v)) bad(w, "[e_i, e_i] must vanish");
            continue;
        }
        if (a > b) {
            std::swap(a, b);
            v = -v;
        }
        std::size_t pos = (static_cast<std::size_t>(a) * n + b) * n + c;
        if (seen[pos] && t(a, b, c) != v) bad(w, "entry conflicts with its skew partner");
        seen[pos] = 1;
        t(a, b, c) = v;
    }
    LieAlgebra<Rational> g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) g.set_bracket(a, b, c, t(a, b, c));
    return g;
}

inline json lie_algebra_json(const LieAlgebra<Rational>& g) {
    json br = json::array();
    const int n = g.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (!is_zero(g.c(a, b, c))) br.push_back({a, b, c, rational_json(g.c(a, b, c))});
    return {{"dim", n}, {"bracket", br}};
}

inline LieRep<Rational> lie_rep(const json& j, const LieAlgebra<Rational>& g, const std::string& where) {
    const int n = nonneg(field(j, "space_dim", where), where + "/space_dim");
    return LieRep<Rational>(g, tensor3(field(j, "action", where), g.dim(), n, n, where + "/action"));
}

inline json lie_rep_json(const LieRep<Rational>& r) {
    return {{"space_dim", r.space_dim}, {"action", tensor3_json(r.action)}};
}

inline MatchedPair<Rational> matched_pair(const json& j, const std::string& where) {
    auto g = lie_algebra(field(j, "g", where), where + "/g");
    auto h = lie_algebra(field(j, "h", where), where + "/h");
    const int m = g.dim(), n = h.dim();
    auto rho = tensor3(field(j, "rho", where), m, n, n, where + "/rho");
    auto psi = tensor3(field(j, "psi", where), n, m, m, where + "/psi");
    return MatchedPair<Rational>(g, h, rho, psi);
}

inline json matched_pair_json(const MatchedPair<Rational>& mp) {
    return {{"g", lie_algebra_json(mp.g)}, {"h", lie_algebra_json(mp.h)}, {"rho", tensor3_json(mp.rho)},
            {"psi", tensor3_json(mp.psi)}};
}

inline MPRepresentation<Rational> mp_representation(const json& j, const MatchedPair<Rational>& base,
                                                    const std::string& where) {
    const auto& dims = array(field(j, "dims", where), where + "/dims");
    if (dims.size() != 2) bad(where + "/dims", "expected [p, q]");
    const int p = nonneg(dims[0], where + "/dims[0]"), q = nonneg(dims[1], where + "/dims[1]");
    const int m = base.m(), n = base.n();
    MPRepresentation<Rational> r(base, p, q);
    r.rho_V = tensor3(field(j, "rho_V", where), m, p, p, where + "/rho_V");
    r.psi_V = tensor3(field(j, "psi_V", where), n, p, p, where + "/psi_V");
    r.rho_W = tensor3(field(j, "rho_W", where), m, q, q, where + "/rho_W");
    r.psi_W = tensor3(field(j, "psi_W", where), n, q, q, where + "/psi_W");
    r.alpha = tensor3(field(j, "alpha", where), p, n, q, where + "/alpha");
    r.beta = tensor3(field(j, "beta", where), q, m, p, where + "/beta");
    return r;
}

inline json mp_representation_json(const MPRepresentation<Rational>& r) {
    return {{"dims", {r.p, r.q}},
            {"rho_V", tensor3_json(r.rho_V)},
            {"psi_V", tensor3_json(r.psi_V)},
            {"rho_W", tensor3_json(r.rho_W)},
            {"psi_W", tensor3_json(r.psi_W)},
            {"alpha", tensor3_json(r.alpha)},
            {"beta", tensor3_json(r.beta)}};
}

namespace detail {
// increasing order of a tuple, with the sign of the sorting permutation; 0 on repeats
inline int sort_tuple(std::vector<int>& t) {
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t k = 0; k + 1 < t.size() - i; ++k)
            if (t[k] > t[k + 1]) {
                std::swap(t[k], t[k + 1]);
                sign = -sign;
            }
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
        if (t[k] == t[k + 1]) return 0;
    return sign;
}

inline std::vector<int> tuple(const json& j, int bound, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an index tuple");
    std::vector<int> t;
    for (std::size_t i = 0; i < j.size(); ++i) t.push_back(index(j[i], bound, where + "[" + std::to_string(i) + "]"));
    return t;
}

inline void bitensor_entries(const json& j, BiTensor<Rational>& B, int m, int n, int out, const std::string& where) {
    array(j, where);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string w = where + "[" + std::to_string(e) + "]";
        const auto& row = j[e];
        if (!row.is_array() || row.size() != 4) bad(w, "expected [gtuple, htuple, idx, \"c\"]");
        auto gs = tuple(row[0], m, w + "[0]");
        auto hs = tuple(row[1], n, w + "[1]");
        if (static_cast<int>(gs.size()) != B.g_arity() || static_cast<int>(hs.size()) != B.h_arity())
            bad(w, "tuple lengths do not match the component");
        int o = index(row[2], out, w + "[2]");
        Rational v = rational(row[3], w + "[3]");
        int s = sort_tuple(gs) * sort_tuple(hs);
        if (s == 0) {
            if (!is_zero(v)) bad(w, "repeated index in a skew slot");
            continue;
        }
        B.at(gs, hs, o) = s > 0 ? v : Rational(-v);
    }
}

inline json bitensor_json(const BiTensor<Rational>& B) {
    json out = json::array();
    B.for_each([&](const std::vector<int>& gs, const std::vector<int>& hs, int o, const Rational& c) {
        if (!is_zero(c)) out.push_back({gs, hs, o, rational_json(c)});
    });
    return out;
}
} // namespace detail

inline MPCochain<Rational> cochain(const json& j, int m, int n, int p, int q, const std::string& where) {
    const int deg = nonneg(field(j, "degree", where), where + "/degree");
    auto c = MPCochain<Rational>::zero(m, n, p, q, deg);
    const std::string wc = where + "/components";
    const auto& comps = array(field(j, "components", where), wc);
    for (std::size_t e = 0; e < comps.size(); ++e) {
        const std::string w = wc + "[" + std::to_string(e) + "]";
        const int r = nonneg(field(comps[e], "r", w), w + "/r");
        auto it = std::find_if(c.pieces.begin(), c.pieces.end(), [&](const auto& pc) { return pc.r == r; });
        if (it == c.pieces.end()) bad(w + "/r", "no component r=" + std::to_string(r) + " in degree " + std::to_string(deg));
        if (comps[e].contains("part_V")) detail::bitensor_entries(comps[e]["part_V"], it->V, m, n, p, w + "/part_V");
        if (comps[e].contains("part_W")) detail::bitensor_entries(comps[e]["part_W"], it->W, m, n, q, w + "/part_W");
    }
    return c;
}

inline json cochain_json(const MPCochain<Rational>& c) {
    json comps = json::array();
    for (const auto& pc : c.pieces)
        comps.push_back({{"r", pc.r}, {"part_V", detail::bitensor_json(pc.V)}, {"part_W", detail::bitensor_json(pc.W)}});
    return {{"degree", c.degree}, {"components", comps}};
}

inline json dims_json(const std::vector<DegreeDims>& dims) {
    json out = json::array();
    for (const auto& d : dims) out.push_back({{"degree", d.degree}, {"cochain_dim", d.cochain_dim}, {"h_dim", d.h_dim}});
    return out;
}

inline DeformationCandidate deformation(const json& j, int m, int n, const std::string& where) {
    DeformationCandidate d;
    d.mu1 = tensor3(field(j, "mu1", where), m, m, m, where + "/mu1");
    d.nu1 = tensor3(field(j, "nu1", where), n, n, n, where + "/nu1");
    d.rho1 = tensor3(field(j, "rho1", where), m, n, n, where + "/rho1");
    d.psi1 = tensor3(field(j, "psi1", where), n, m, m, where + "/psi1");
    d.check(m, n);
    return d;
}

inline json deformation_json(const DeformationCandidate& d) {
    return {{"mu1", tensor3_json(d.mu1)}, {"nu1", tensor3_json(d.nu1)}, {"rho1", tensor3_json(d.rho1)},
            {"psi1", tensor3_json(d.psi1)}};
}

inline AbelianExtension extension(const json& j, const std::string& where) {
    AbelianExtension e;
    e.total = matched_pair(j, where);
    const auto& s = array(field(j, "split", where), where + "/split");
    if (s.size() != 4) bad(where + "/split", "expected [m, p, n, q]");
    e.m = nonneg(s[0], where + "/split[0]");
    e.p = nonneg(s[1], where + "/split[1]");
    e.n = nonneg(s[2], where + "/split[2]");
    e.q = nonneg(s[3], where + "/split[3]");
    if (e.m + e.p != e.total.m() || e.n + e.q != e.total.n()) bad(where + "/split", "split does not add up to the total dimensions");
    return e;
}

inline json extension_json(const AbelianExtension& e) {
    json j = matched_pair_json(e.total);
    j["split"] = {e.m, e.p, e.n, e.q};
    return j;
}

inline TwoTermLInfinity two_term(const json& j, const std::string& where) {
    const int a = nonneg(field(j, "dim0", where), where + "/dim0");
    const int b = nonneg(field(j, "dim1", where), where + "/dim1");
    TwoTermLInfinity t(a, b);
    if (j.contains("mu1")) t.mu1 = matrix(j["mu1"], a, b, where + "/mu1");
    auto g0 = lie_algebra({{"dim", a}, {"bracket", field(j, "bracket00", where)}}, where);
    t.bracket00 = g0.structure();
    t.bracket01 = tensor3(field(j, "bracket01", where), a, b, b, where + "/bracket01");
    const std::string wm = where + "/mu3";
    const auto& mu3 = array(field(j, "mu3", where), wm);
    for (std::size_t e = 0; e < mu3.size(); ++e) {
        const std::string w = wm + "[" + std::to_string(e) + "]";
        const auto& row = mu3[e];
        if (!row.is_array() || row.size() != 5) bad(w, "expected [i, j, k, idx, \"c\"]");
        std::vector<int> t3{index(row[0], a, w + "[0]"), index(row[1], a, w + "[1]"), index(row[2], a, w + "[2]")};
        int o = index(row[3], b, w + "[3]");
        Rational v = rational(row[4], w + "[4]");
        int s = detail::sort_tuple(t3);
        if (s == 0) {
            if (!is_zero(v)) bad(w, "repeated index in a skew slot");
            continue;
        }
        t.mu3.at(t3, o) = s > 0 ? v : Rational(-v);
    }
    return t;
}

inline json two_term_json(const TwoTermLInfinity& t) {
    json mu3 = json::array();
    for (const auto& s : subsets(t.dim0, 3))
        for (int o = 0; o < t.dim1; ++o)
            if (!is_zero(t.mu3.at(s, o))) mu3.push_back({s[0], s[1], s[2], o, rational_json(t.mu3.at(s, o))});
    json br = lie_algebra_json(LieAlgebra<Rational>::from_tensor(t.bracket00))["bracket"];
    return {{"dim0", t.dim0}, {"dim1", t.dim1}, {"mu1", matrix_json(t.mu1)}, {"bracket00", br},
            {"bracket01", tensor3_json(t.bracket01)}, {"mu3", mu3}};
}

inline Tensor4 tensor4(const json& j, int d0, int d1, int d2, int d3, const std::string& where) {
    Tensor4 t(d0, d1, d2, d3);
    array(j, where);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string w = where + "[" + std::to_string(e) + "]";
        const auto& row = j[e];
        if (!row.is_array() || row.size() != 5) bad(w, "expected [i, j, k, l, \"c\"]");
        t(index(row[0], d0, w + "[0]"), index(row[1], d1, w + "[1]"), index(row[2], d2, w + "[2]"),
          index(row[3], d3, w + "[3]")) = rational(row[4], w + "[4]");
    }
    return t;
}

inline json tensor4_json(const Tensor4& t) {
    json out = json::array();
    for (int a = 0; a < t.d0; ++a)
        for (int b = 0; b < t.d1; ++b)
            for (int c = 0; c < t.d2; ++c)
                for (int d = 0; d < t.d3; ++d)
                    if (!is_zero(t(a, b, c, d))) out.push_back({a, b, c, d, rational_json(t(a, b, c, d))});
    return out;
}

// {"r00","r01","r10","r3"} for an action of t on (V1 -> V0)
inline SkeletalRep skeletal_rep(const json& j, const TwoTermLInfinity& t, int v0, int v1, const std::string& where) {
    SkeletalRep r(t, v0, v1);
    r.r00 = tensor3(field(j, "r00", where), t.dim0, v0, v0, where + "/r00");
    r.r01 = tensor3(field(j, "r01", where), t.dim0, v1, v1, where + "/r01");
    r.r10 = tensor3(field(j, "r10", where), t.dim1, v0, v1, where + "/r10");
    r.r3 = tensor4(field(j, "r3", where), t.dim0, t.dim0, v0, v1, where + "/r3");
    return r;
}

inline json skeletal_rep_json(const SkeletalRep& r) {
    return {{"r00", tensor3_json(r.r00)}, {"r01", tensor3_json(r.r01)}, {"r10", tensor3_json(r.r10)},
            {"r3", tensor4_json(r.r3)}};
}

inline SkeletalMatchedPair skeletal_matched_pair(const json& j, const std::string& where) {
    SkeletalMatchedPair s;
    s.G = two_term(field(j, "G", where), where + "/G");
    s.H = two_term(field(j, "H", where), where + "/H");
    s.rho = skeletal_rep(field(j, "rho", where), s.G, s.H.dim0, s.H.dim1, where + "/rho");
    s.psi = skeletal_rep(field(j, "psi", where), s.H, s.G.dim0, s.G.dim1, where + "/psi");
    return s;
}

inline json skeletal_matched_pair_json(const SkeletalMatchedPair& s) {
    return {{"G", two_term_json(s.G)}, {"H", two_term_json(s.H)}, {"rho", skeletal_rep_json(s.rho)},
            {"psi", skeletal_rep_json(s.psi)}};
}

inline SkeletalTriple skeletal_triple(const json& j, const std::string& where) {
    SkeletalTriple t;
    t.mp = matched_pair(field(j, "matched_pair", where), where + "/matched_pair");
    t.rep = mp_representation(field(j, "representation", where), t.mp, where + "/representation");
    t.cocycle = cochain(field(j, "cocycle", where), t.mp.m(), t.mp.n(), t.rep.p, t.rep.q, where + "/cocycle");
    return t;
}

inline json skeletal_triple_json(const SkeletalTriple& t) {
    return {{"matched_pair", matched_pair_json(t.mp)},
            {"representation", mp_representation_json(t.rep)},
            {"cocycle", cochain_json(t.cocycle)}};
}

inline LieBialgebra bialgebra(const json& j, const std::string& where) {
    auto g = lie_algebra(field(j, "g", where), where + "/g");
    const int m = g.dim();
    // [k, i, j, "c"]: δ(e_k) has coefficient c on e_i ∧ e_j
    auto d = tensor3(field(j, "cobracket", where), m, m, m, where + "/cobracket");
    Tensor3<Rational> full(m, m, m);
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                if (a == b) {
                    if (!is_zero(d(k, a, b))) bad(where + "/cobracket", "diagonal entry must vanish");
                    continue;
                }
                if (a < b) {
                    full(k, a, b) += d(k, a, b);
                    full(k, b, a) -= d(k, a, b);
                }
            }
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < a; ++b)
                if (!is_zero(d(k, a, b)) && d(k, a, b) != full(k, a, b))
                    bad(where + "/cobracket", "entry conflicts with its skew partner");
    return LieBialgebra(g, full);
}

inline json bialgebra_json(const LieBialgebra& b) {
    json d = json::array();
    const int m = b.g.dim();
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < m; ++a)
            for (int c = a + 1; c < m; ++c)
                if (!is_zero(b.cobracket(k, a, c))) d.push_back({k, a, c, rational_json(b.cobracket(k, a, c))});
    return {{"g", lie_algebra_json(b.g)}, {"cobracket", d}};
}

inline json report_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json w = json::array();
        for (const auto& x : c.witnesses) w.push_back({{"at", x.where}, {"residual", x.residual}});
        checks.push_back({{"name", c.name},
                          {"label", c.label},
                          {"evaluated", c.evaluated},
                          {"failures", c.failures},
                          {"passed", c.passed()},
                          {"witnesses", w}});
    }
    return {{"subject", r.subject}, {"valid", r.valid()}, {"passed", r.passed_count()}, {"total", r.checks.size()},
            {"checks", checks}};
}

} // namespace mpla::io
