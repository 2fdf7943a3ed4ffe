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

#ifndef ELLSURF_MODULAR_HPP
#define ELLSURF_MODULAR_HPP

#include <cstdint>
#include <random>
#include <tuple>
#include <algorithm>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace ellsurf {

/// Arithmetic in Z/pZ for a word-size prime p.
class PrimeField {
   public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2) fail(ErrorKind::Domain, "modulus must be a prime >= 2");
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    value_type add(value_type a, value_type b) const noexcept {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    value_type pow(value_type b, std::uint64_t e) const noexcept {
        value_type r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    value_type inv(value_type a) const {
        if (a == 0) fail(ErrorKind::Domain, "inverse of zero mod p");
        return pow(a, p_ - 2);
    }
    value_type from(const Integer& v) const { return mod_u64(v, p_); }
    value_type from(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
    }
    /// Representative in (-p/2, p/2].
    Integer lift_symmetric(value_type v) const {
        return v > p_ / 2 ? from_u64(v) - from_u64(p_) : from_u64(v);
    }

   private:
    std::uint64_t p_;
};

/// Polynomial over Z/pZ, ascending coefficients, no trailing zeros.
struct ZpPoly {
    std::vector<std::uint64_t> c;

    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    std::uint64_t leading() const noexcept { return c.empty() ? 0 : c.back(); }
    std::uint64_t operator[](std::size_t i) const noexcept { return i < c.size() ? c[i] : 0; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    friend bool operator==(const ZpPoly& a, const ZpPoly& b) { return a.c == b.c; }
};

namespace zp {

inline ZpPoly reduce(const PrimeField& F, const IntPoly& f) {
    ZpPoly r;
    for (const auto& v : f.coefficients()) r.c.push_back(F.from(v));
    r.trim();
    return r;
}

inline ZpPoly constant(std::uint64_t v) {
    ZpPoly r{{v}};
    r.trim();
    return r;
}

inline ZpPoly x_power(std::size_t k) {
    ZpPoly r;
    r.c.assign(k + 1, 0);
    r.c[k] = 1;
    return r;
}

inline ZpPoly add(const PrimeField& F, const ZpPoly& a, const ZpPoly& b) {
    ZpPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a[i], b[i]);
    r.trim();
    return r;
}

inline ZpPoly sub(const PrimeField& F, const ZpPoly& a, const ZpPoly& b) {
    ZpPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a[i], b[i]);
    r.trim();
    return r;
}

inline ZpPoly scale(const PrimeField& F, const ZpPoly& a, std::uint64_t s) {
    ZpPoly r;
    for (auto v : a.c) r.c.push_back(F.mul(v, s));
    r.trim();
    return r;
}

inline ZpPoly mul(const PrimeField& F, const ZpPoly& a, const ZpPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZpPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

inline std::pair<ZpPoly, ZpPoly> divmod(const PrimeField& F, const ZpPoly& a, const ZpPoly& b) {
    if (b.is_zero()) fail(ErrorKind::Domain, "division by zero polynomial mod p");
    if (a.degree() < b.degree()) return {ZpPoly{}, a};
    std::vector<std::uint64_t> r = a.c;
    const int db = b.degree();
    std::vector<std::uint64_t> q(a.degree() - db + 1, 0);
    const std::uint64_t inv_lb = F.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
        if (!r[i]) continue;
        std::uint64_t f = F.mul(r[i], inv_lb);
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(f, b.c[j]));
    }
    r.resize(db);
    ZpPoly qq{q}, rr{r};
    qq.trim();
    rr.trim();
    return {qq, rr};
}

inline ZpPoly rem(const PrimeField& F, const ZpPoly& a, const ZpPoly& b) { return divmod(F, a, b).second; }
inline ZpPoly quo(const PrimeField& F, const ZpPoly& a, const ZpPoly& b) { return divmod(F, a, b).first; }

inline ZpPoly monic(const PrimeField& F, const ZpPoly& a) {
    if (a.is_zero()) return a;
    return scale(F, a, F.inv(a.leading()));
}

inline ZpPoly gcd(const PrimeField& F, ZpPoly a, ZpPoly b) {
    while (!b.is_zero()) {
        ZpPoly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<ZpPoly, ZpPoly, ZpPoly> xgcd(const PrimeField& F, ZpPoly a, ZpPoly b) {
    ZpPoly s0 = constant(1), s1, t0, t1 = constant(1);
    while (!b.is_zero()) {
        auto [q, r] = divmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
        ZpPoly s2 = sub(F, s0, mul(F, q, s1));
        ZpPoly t2 = sub(F, t0, mul(F, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t li = F.inv(a.leading());
    return {scale(F, a, li), scale(F, s0, li), scale(F, t0, li)};
}

inline ZpPoly derivative(const PrimeField& F, const ZpPoly& a) {
    ZpPoly r;
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(F.mul(a.c[i], F.from(static_cast<long>(i % F.characteristic()))));
    r.trim();
    return r;
}

inline ZpPoly powmod(const PrimeField& F, ZpPoly base, Integer e, const ZpPoly& m) {
    ZpPoly r = constant(1);
    base = rem(F, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(F, mul(F, r, base), m);
        base = rem(F, mul(F, base, base), m);
        e /= 2;
    }
    return r;
}

inline std::uint64_t evaluate(const PrimeField& F, const ZpPoly& a, std::uint64_t x) {
    std::uint64_t r = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

/// Squarefree factorization over F_p, valid for multiplicities divisible by p.
/// Returns (factor, multiplicity) pairs with monic, pairwise coprime factors.
inline std::vector<std::pair<ZpPoly, unsigned>> squarefree(const PrimeField& F, const ZpPoly& f) {
    if (f.is_zero()) fail(ErrorKind::Domain, "squarefree of zero mod p");
    std::vector<std::pair<ZpPoly, unsigned>> out;
    ZpPoly a = monic(F, f);
    if (a.degree() <= 0) return out;
    const std::uint64_t p = F.characteristic();
    ZpPoly c = gcd(F, a, derivative(F, a));
    ZpPoly w = quo(F, a, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        ZpPoly y = gcd(F, w, c);
        ZpPoly z = quo(F, w, y);
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = quo(F, c, y);
    }
    if (c.degree() > 0) {
        // c is a p-th power: coefficients only at multiples of p
        ZpPoly root;
        for (std::size_t k = 0; k * p < c.c.size(); ++k) root.c.push_back(c.c[k * p]);
        root.trim();
        for (auto& [g, m] : squarefree(F, root)) out.emplace_back(g, m * static_cast<unsigned>(p));
    }
    return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<ZpPoly, unsigned>> distinct_degree(const PrimeField& F, ZpPoly f) {
    std::vector<std::pair<ZpPoly, unsigned>> out;
    const Integer p = from_u64(F.characteristic());
    ZpPoly h = rem(F, x_power(1), f);
    unsigned d = 0;
    while (f.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = powmod(F, h, p, f);
        ZpPoly g = gcd(F, f, sub(F, h, x_power(1)));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = quo(F, f, g);
            h = rem(F, h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void equal_degree(const PrimeField& F, const ZpPoly& f, unsigned d, std::mt19937_64& rng,
                         std::vector<ZpPoly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = F.characteristic();
    Integer e = (ipow(from_u64(p), d) - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        ZpPoly r;
        for (int i = 0; i < f.degree(); ++i) r.c.push_back(dist(rng));
        r.trim();
        if (r.degree() <= 0) continue;
        ZpPoly g = gcd(F, f, r);
        if (g.degree() <= 0) {
            ZpPoly t = powmod(F, r, e, f);
            g = gcd(F, f, sub(F, t, constant(1)));
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, quo(F, f, g), d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial over F_p, p odd.
inline std::vector<ZpPoly> factor_squarefree(const PrimeField& F, const ZpPoly& f) {
    if (F.characteristic() == 2) fail(ErrorKind::Domain, "factor_squarefree needs odd p");
    std::mt19937_64 rng(0x5eed + F.characteristic());
    std::vector<ZpPoly> out;
    for (auto& [g, d] : distinct_degree(F, monic(F, f))) equal_degree(F, g, d, rng, out);
    return out;
}

}  // namespace zp
}  // namespace ellsurf

#endif
