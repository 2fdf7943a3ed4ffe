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

#ifndef ELLSURF_POLYNOMIAL_ALGORITHMS_HPP
#define ELLSURF_POLYNOMIAL_ALGORITHMS_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "modular.hpp"
#include "number_theory.hpp"
#include "polynomial.hpp"

namespace ellsurf {

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail(ErrorKind::Domain, "pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r = a.coefficients();
    const int db = b.degree();
    const Integer lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Integer f = r[i];
        for (auto& v : r) v *= lb;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
    }
    r.resize(db);
    return IntPoly(std::move(r));
}

/// Resultant over Z by the subresultant PRS.
inline Integer resultant(IntPoly A, IntPoly B) {
    if (A.is_zero() || B.is_zero()) fail(ErrorKind::Domain, "resultant with zero polynomial");
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
        std::swap(A, B);
    }
    if (B.degree() == 0) return s * ipow(B.leading(), A.degree());
    Integer a = content(A), b = content(B);
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    A = exact_quotient(A, IntPoly(a));
    B = exact_quotient(B, IntPoly(b));
    Integer g = 1, h = 1;
    Integer t = ipow(a, B.degree()) * ipow(b, A.degree());
    for (;;) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = pseudo_remainder(A, B);
        A = B;
        if (R.is_zero()) return 0;
        Integer divisor = g * ipow(h, delta);
        std::vector<Integer> rc;
        for (const auto& v : R.coefficients()) rc.push_back(exact_div(v, divisor));
        B = IntPoly(std::move(rc));
        g = A.leading();
        // h <- h^(1-delta) g^delta
        if (delta == 0)
            ;  // unchanged
        else
            h = exact_div(ipow(g, delta), ipow(h, delta - 1));
        if (B.degree() == 0) {
            const int da = A.degree();
            Integer hh = exact_div(ipow(B.leading(), da), ipow(h, da - 1));
            return s * t * hh;
        }
    }
}

/// Res(f, g) = lc(f)^deg g * prod g(roots of f).
inline Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::Domain, "resultant with zero polynomial");
    auto [cf, F] = rational_content(f);
    auto [cg, G] = rational_content(g);
    return rpow(cf, g.degree()) * rpow(cg, f.degree()) * Rational(resultant(F, G));
}

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
inline Rational discriminant(const RatPoly& f) {
    if (f.is_zero()) fail(ErrorKind::Domain, "discriminant of zero polynomial");
    const int d = f.degree();
    if (d < 1) fail(ErrorKind::Domain, "discriminant needs degree >= 1");
    if (d == 1) return Rational(1);
    Rational r = resultant(f, f.derivative()) / f.leading();
    return ((d * (d - 1) / 2) % 2) ? Rational(-r) : r;
}

/// Primitive gcd in Z[x] with positive leading coefficient (subresultant PRS).
inline IntPoly gcd(IntPoly A, IntPoly B) {
    if (A.degree() < B.degree()) std::swap(A, B);
    if (B.is_zero()) return A.is_zero() ? A : primitive_part(A);
    Integer d = igcd(content(A), content(B));
    A = primitive_part(A);
    B = primitive_part(B);
    Integer g = 1, h = 1;
    for (;;) {
        const int delta = A.degree() - B.degree();
        IntPoly R = pseudo_remainder(A, B);
        if (R.is_zero()) return primitive_part(B);
        if (R.degree() == 0) return IntPoly(Integer(1));
        A = B;
        Integer divisor = g * ipow(h, delta);
        std::vector<Integer> rc;
        for (const auto& v : R.coefficients()) rc.push_back(exact_div(v, divisor));
        B = IntPoly(std::move(rc));
        g = A.leading();
        if (delta != 0) h = exact_div(ipow(g, delta), ipow(h, delta - 1));
    }
    (void)d;
}

/// Monic gcd over Q.
inline RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) return RatPoly();
    IntPoly A = a.is_zero() ? IntPoly() : rational_content(a).second;
    IntPoly B = b.is_zero() ? IntPoly() : rational_content(b).second;
    return make_monic(to_rational(gcd(A, B)));
}

/// Yun's squarefree decomposition over Q: monic, squarefree, pairwise coprime
/// factors with f = lc(f) * prod factor^multiplicity. Sorted by multiplicity.
inline std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) fail(ErrorKind::Domain, "squarefree decomposition of zero");
    std::vector<std::pair<RatPoly, unsigned>> out;
    RatPoly a = make_monic(f);
    if (a.degree() < 1) return out;
    RatPoly da = a.derivative();
    RatPoly a0 = gcd(a, da);
    RatPoly b = a / a0;
    RatPoly c = da / a0;
    RatPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        RatPoly ai = gcd(b, d);
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
        if (ai.degree() > 0) out.emplace_back(make_monic(ai), i);
        ++i;
    }
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

/// n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for proper divisors d.
inline IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0) fail(ErrorKind::Domain, "cyclotomic(0)");
    IntPoly r = IntPoly::monomial(Integer(1), n) - IntPoly(Integer(1));
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) r = exact_quotient(r, cyclotomic(d));
    return r;
}

namespace detail {

inline IntPoly mod_reduce(const IntPoly& f, const Integer& M) {
    std::vector<Integer> c;
    for (const auto& v : f.coefficients()) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
        c.push_back(r);
    }
    return IntPoly(std::move(c));
}

inline IntPoly mod_symmetric(const IntPoly& f, const Integer& M) {
    std::vector<Integer> c;
    const Integer half = M / 2;
    const IntPoly r = mod_reduce(f, M);
    for (const auto& v : r.coefficients()) c.push_back(v > half ? Integer(v - M) : v);
    return IntPoly(std::move(c));
}

/// Division by a monic divisor over Z/M.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Integer& M) {
    if (a.degree() < b.degree()) return {IntPoly(), mod_reduce(a, M)};
    std::vector<Integer> r = mod_reduce(a, M).coefficients();
    r.resize(a.degree() + 1, Integer(0));
    const int db = b.degree();
    std::vector<Integer> q(a.degree() - db + 1, Integer(0));
    for (int i = a.degree(); i >= db; --i) {
        Integer f = r[i] % M;
        if (f < 0) f += M;
        if (f == 0) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] - f * b[j]) % M;
    }
    r.resize(db);
    return {mod_reduce(IntPoly(std::move(q)), M), mod_reduce(IntPoly(std::move(r)), M)};
}

inline IntPoly zp_lift(const ZpPoly& f) {
    std::vector<Integer> c;
    for (auto v : f.c) c.push_back(from_u64(v));
    return IntPoly(std::move(c));
}

struct HenselPair {
    IntPoly g, h;
};

/// Lift f = g*h (h monic) from mod p to mod p^(2^steps) >= target.
inline HenselPair hensel_lift_pair(const IntPoly& f, IntPoly g, IntPoly h, std::uint64_t p, const Integer& target) {
    PrimeField F(p);
    auto [one, s0, t0] = zp::xgcd(F, zp::reduce(F, g), zp::reduce(F, h));
    IntPoly s = zp_lift(s0), t = zp_lift(t0);
    Integer m = from_u64(p);
    while (m < target) {
        Integer M = m * m;
        IntPoly e = mod_reduce(f - g * h, M);
        auto [q, r] = divmod_monic(s * e, h, M);
        IntPoly g2 = mod_reduce(g + t * e + q * g, M);
        IntPoly h2 = mod_reduce(h + r, M);
        IntPoly b = mod_reduce(s * g2 + t * h2 - IntPoly(Integer(1)), M);
        auto [c, d] = divmod_monic(s * b, h2, M);
        IntPoly s2 = mod_reduce(s - d, M);
        IntPoly t2 = mod_reduce(t - t * b - c * g2, M);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = M;
    }
    return {g, h};
}

inline void hensel_lift_all(const IntPoly& f, const std::vector<ZpPoly>& factors, std::uint64_t p,
                            const Integer& target, std::vector<IntPoly>& out) {
    if (factors.size() == 1) {
        out.push_back(f);
        return;
    }
    PrimeField F(p);
    const std::size_t half = factors.size() / 2;
    std::vector<ZpPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZpPoly> right(factors.begin() + half, factors.end());
    ZpPoly gl = zp::constant(F.from(f.leading())), hr = zp::constant(1);
    for (const auto& u : left) gl = zp::mul(F, gl, u);
    for (const auto& u : right) hr = zp::mul(F, hr, u);
    HenselPair lifted = hensel_lift_pair(f, zp_lift(gl), zp_lift(hr), p, target);
    hensel_lift_all(lifted.g, left, p, target, out);
    hensel_lift_all(lifted.h, right, p, target, out);
}

inline Integer lifting_modulus(std::uint64_t p, const Integer& target) {
    Integer m = from_u64(p);
    while (m < target) m *= m;
    return m;
}

inline void subsets_of_size(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Irreducible factors over Z of a primitive squarefree polynomial of
/// positive degree (Zassenhaus: factor mod p, Hensel lift, recombine).
inline std::vector<IntPoly> factor_squarefree_integer(const IntPoly& f_in) {
    IntPoly f = primitive_part(f_in);
    if (f.degree() <= 1) return {f};
    // choose an odd prime keeping degree and squarefreeness, fewest factors
    std::uint64_t best_p = 0;
    std::vector<ZpPoly> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 6 && p < 100000; p += 2) {
        if (!is_prime_u64_small(p)) continue;
        PrimeField F(p);
        if (F.from(f.leading()) == 0) continue;
        ZpPoly fp = zp::monic(F, zp::reduce(F, f));
        if (zp::gcd(F, fp, zp::derivative(F, fp)).degree() > 0) continue;
        auto facs = zp::factor_squarefree(F, fp);
        ++tried;
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) fail(ErrorKind::Domain, "no suitable prime for factorization");
    if (best.size() == 1) return {f};

    Integer norm2 = 0, maxc = 0;
    for (const auto& v : f.coefficients()) {
        norm2 += v * v;
        Integer a = abs(v);
        if (a > maxc) maxc = a;
    }
    Integer norm = sqrt(norm2) + 1;
    Integer L = abs(f.leading());
    Integer bound = 2 * L * ipow(Integer(2), f.degree()) * norm + 1;
    Integer M = detail::lifting_modulus(best_p, bound);

    std::vector<IntPoly> lifted;
    detail::hensel_lift_all(f, best, best_p, bound, lifted);
    // make each lifted factor monic mod M (the first one carries lc(f))
    std::vector<IntPoly> monic_factors;
    for (auto& g : lifted) {
        Integer lc = g.leading();
        Integer inv;
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
        monic_factors.push_back(detail::mod_reduce(g * inv, M));
    }

    std::vector<IntPoly> result;
    IntPoly rest = f;
    std::size_t k = 1;
    while (2 * k <= monic_factors.size()) {
        bool found = false;
        std::vector<std::vector<std::size_t>> subsets;
        std::vector<std::size_t> cur;
        detail::subsets_of_size(monic_factors.size(), k, 0, cur, subsets);
        for (const auto& subset : subsets) {
            IntPoly g(Integer(rest.leading()));
            for (auto i : subset) g = detail::mod_reduce(g * monic_factors[i], M);
            g = primitive_part(detail::mod_symmetric(g, M));
            if (g.degree() < 1 || !divides(g, rest)) continue;
            result.push_back(g);
            rest = exact_quotient(rest, g);
            std::vector<IntPoly> remaining;
            for (std::size_t i = 0; i < monic_factors.size(); ++i)
                if (std::find(subset.begin(), subset.end(), i) == subset.end()) remaining.push_back(monic_factors[i]);
            monic_factors = std::move(remaining);
            found = true;
            break;
        }
        if (!found) ++k;
    }
    if (rest.degree() > 0) result.push_back(primitive_part(rest));
    for (auto& g : result)
        if (g.leading() < 0) g = -g;
    return result;
}

/// Lexicographic order on (degree, coefficients) for deterministic output.
inline bool poly_less(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// Complete factorization over Q into monic irreducibles with multiplicity.
inline std::vector<std::pair<RatPoly, unsigned>> factor_rational(const RatPoly& f) {
    std::vector<std::pair<RatPoly, unsigned>> out;
    for (auto& [g, m] : squarefree_decomposition(f)) {
        IntPoly G = rational_content(g).second;
        for (auto& h : factor_squarefree_integer(G)) out.emplace_back(make_monic(to_rational(h)), m);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

/// Multiplicity of the monic irreducible pi in f (f nonzero).
inline unsigned order_at(const RatPoly& f, const RatPoly& pi) {
    if (f.is_zero()) fail(ErrorKind::Domain, "order of zero polynomial");
    unsigned k = 0;
    RatPoly g = f;
    for (;;) {
        auto [q, r] = divmod(g, pi);
        if (!r.is_zero()) return k;
        g = q;
        ++k;
    }
}

}  // namespace ellsurf

#endif
