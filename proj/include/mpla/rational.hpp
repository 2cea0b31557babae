#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace mpla {

using Rational = mpq_class;

// "p/q", "-p", "p" -> canonical rational
inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational");
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorKind::ParseError, "bad rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(Rational r) {
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// k[t]/(t^2)
template <class T>
struct Dual {
    T a{0};
    T b{0};

    Dual() = default;
    Dual(int x) : a(x), b(0) {}
    Dual(const T& x) : a(x), b(0) {}
    Dual(const T& x, const T& y) : a(x), b(y) {}

    Dual& operator+=(const Dual& o) { a += o.a; b += o.b; return *this; }
    Dual& operator-=(const Dual& o) { a -= o.a; b -= o.b; return *this; }
    Dual& operator*=(const Dual& o) {
        T nb = a * o.b + b * o.a;
        a *= o.a;
        b = nb;
        return *this;
    }
    friend Dual operator+(Dual x, const Dual& y) { return x += y; }
    friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
    friend Dual operator*(Dual x, const Dual& y) { return x *= y; }
    friend Dual operator-(const Dual& x) { return Dual(T(-x.a), T(-x.b)); }
    friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }
};

template <class T>
bool is_zero(const Dual<T>& d) { return is_zero(d.a) && is_zero(d.b); }

template <class T>
std::string to_string(const Dual<T>& d) {
    if (is_zero(d.b)) return to_string(d.a);
    return "(" + to_string(d.a) + ")+(" + to_string(d.b) + ")t";
}

using DualQ = Dual<Rational>;

} // namespace mpla
