/*
   Copyright 2026 The ellsurf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELLSURF_POLYNOMIAL_HPP
#define ELLSURF_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace ellsurf {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and degree() is -1 for it.
template <class T>
class Poly {
   public:
    using coefficient_type = T;

    Poly() = default;
    Poly(const T& c) : c_{c} { trim(); }
    Poly(int c) : c_{T(c)} { trim(); }
    Poly(std::initializer_list<T> l) : c_(l) { trim(); }
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(const T& coeff, std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = coeff;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<T>& coefficients() const noexcept { return c_; }

    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }
    T constant_term() const { return (*this)[0]; }

    template <class U>
    U evaluate(const U& x) const {
        U r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + U(*it);
        return r;
    }
    T operator()(const T& x) const { return evaluate<T>(x); }

    Poly operator-() const {
        std::vector<T> c(c_);
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r(T(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(c));
    }

    /// this(inner(x)) by Horner's rule.
    Poly compose(const Poly& inner) const {
        Poly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly(*it);
        return r;
    }

    /// x^n * this(1/x) for n >= degree.
    Poly reversed(std::size_t n) const {
        std::vector<T> c(n + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[n - i] = c_[i];
        return Poly(std::move(c));
    }

    /// Multiplicity of x as a factor; 0 for the zero polynomial.
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        return k == c_.size() ? 0 : k;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

/// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) fail(ErrorKind::Domain, "polynomial division by zero");
    std::vector<T> r(a.coefficients());
    const int db = b.degree();
    if (a.degree() < db) return {Poly<T>(), a};
    std::vector<T> q(a.degree() - db + 1, T(0));
    const T lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        T f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
    }
    r.resize(db);
    return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).first;
}
template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).second;
}

inline RatPoly to_rational(const IntPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.coefficients().size());
    for (const auto& v : f.coefficients()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

inline bool is_integral(const RatPoly& f) {
    return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                       [](const Rational& r) { return r.get_den() == 1; });
}

inline IntPoly to_integer(const RatPoly& f) {
    std::vector<Integer> c;
    for (const auto& v : f.coefficients()) {
        if (v.get_den() != 1) fail(ErrorKind::Domain, "non-integral coefficient " + v.get_str());
        c.emplace_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

/// gcd of the coefficients, sign taken from the leading coefficient.
inline Integer content(const IntPoly& f) {
    Integer g = 0;
    for (const auto& v : f.coefficients()) g = igcd(g, v);
    if (f.leading() < 0) g = -g;
    return g;
}

inline IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Integer c = content(f);
    std::vector<Integer> out;
    for (const auto& v : f.coefficients()) out.push_back(exact_div(v, c));
    return IntPoly(std::move(out));
}

/// Writes f = c * F with F primitive in Z[x] and positive leading coefficient.
inline std::pair<Rational, IntPoly> rational_content(const RatPoly& f) {
    if (f.is_zero()) return {Rational(0), IntPoly()};
    Integer den = 1;
    for (const auto& v : f.coefficients()) den = ilcm(den, v.get_den());
    std::vector<Integer> c;
    for (const auto& v : f.coefficients()) c.push_back(v.get_num() * exact_div(den, v.get_den()));
    IntPoly F(std::move(c));
    Integer cont = content(F);
    return {make_rational(cont, den), primitive_part(F)};
}

inline RatPoly make_monic(const RatPoly& f) {
    if (f.is_zero()) return f;
    return f * (Rational(1) / f.leading());
}

/// Exact division in Z[x]; throws if b does not divide a.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero() || !is_integral(q)) fail(ErrorKind::Domain, "inexact polynomial division");
    return to_integer(q);
}

inline bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    return r.is_zero() && is_integral(q);
}

namespace detail {
template <class T>
void write_coefficient_term(std::ostream& os, const T& c, std::size_t k, const std::string& var, bool first) {
    T a = c < 0 ? T(-c) : c;
    if (!first)
        os << (c < 0 ? " - " : " + ");
    else if (c < 0)
        os << "-";
    bool unit = (a == 1);
    if (k == 0) {
        os << a;
        return;
    }
    if (!unit) os << a << "*";
    os << var;
    if (k > 1) os << "^" << k;
}
}  // namespace detail

/// Descending-degree rendering with explicit '*' and '^', parseable by
/// parse_polynomial.
template <class T>
std::string to_string(const Poly<T>& f, const std::string& var = "s") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const T& c = f.coefficients()[k];
        if (c == 0) continue;
        detail::write_coefficient_term(os, c, static_cast<std::size_t>(k), var, first);
        first = false;
    }
    return os.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& f) {
    return os << to_string(f);
}

}  // namespace ellsurf

#endif
