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

#ifndef ELLSURF_CHARPOLY_HPP
#define ELLSURF_CHARPOLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace ellsurf {

/// Q_p(X) = (X - 1)(X^4 - s1 X^3 + (e + 2) X^2 - s1 X + 1).
struct FrobeniusCharPoly {
    std::uint64_t p = 0;
    RatPoly Q;
    Rational s1, e;
};

/// Raw traces from counting, before the determinant twist.
struct FrobeniusData {
    std::uint64_t p = 0;
    std::uint64_t N1 = 0, N2 = 0;
    long C1 = 0, C2 = 0;
    Rational T1, T2;  // traces of Frob_p and Frob_p^2 on the non-trivial part
    int eps = 1;      // determinant of the non-trivial part at Frob_p
    Rational t1, t2;  // traces after twisting by the determinant
};

inline RatPoly charpoly_from(const Rational& s1, const Rational& e) {
    RatPoly quartic{Rational(1), -s1, e + 2, -s1, Rational(1)};
    return RatPoly{Rational(-1), Rational(1)} * quartic;
}

/// Roots all on the unit circle, checked exactly: the roots of the quartic are
/// unimodular iff Y^2 - s1 Y + e (Y = X + 1/X) has both roots real in [-2, 2].
inline bool quartic_is_pure(const Rational& s1, const Rational& e) {
    const Rational disc = s1 * s1 - 4 * e;
    if (disc < 0) return false;
    if (abs(s1) > 4) return false;
    const Rational g2 = 4 - 2 * s1 + e, gm2 = 4 + 2 * s1 + e;
    return g2 >= 0 && gm2 >= 0;
}

/// Builds Q_p from the (twisted) traces of Frob_p and Frob_p^2.
inline FrobeniusCharPoly assemble_charpoly(const Rational& t1, const Rational& t2, std::uint64_t p) {
    const Integer P = from_u64(p);
    if (!is_integral(Rational(t1 * P)) || !is_integral(Rational(t2 * P * P)))
        fail(ErrorKind::IntegralityViolation, "p t1 or p^2 t2 not integral at p = " + std::to_string(p));
    if (abs(t1) > 5 || abs(t2) > 5)
        fail(ErrorKind::PurityViolation, "trace exceeds 5 at p = " + std::to_string(p));
    FrobeniusCharPoly cp;
    cp.p = p;
    cp.s1 = t1 - 1;
    cp.e = (cp.s1 * cp.s1 - (t2 + 3)) / 2;
    cp.Q = charpoly_from(cp.s1, cp.e);
    for (const auto& c : cp.Q.coefficients())
        if (!is_integral(Rational(c * P * P)))
            fail(ErrorKind::IntegralityViolation, "p^2 Q_p not integral at p = " + std::to_string(p));
    if (!quartic_is_pure(cp.s1, cp.e))
        fail(ErrorKind::PurityViolation, "root off the unit circle at p = " + std::to_string(p));
    return cp;
}

/// Power sums p_1..p_k of the roots of a monic polynomial (Newton).
inline std::vector<Rational> power_sums(const RatPoly& f, unsigned k) {
    const int n = f.degree();
    if (n < 1 || f.leading() != 1) fail(ErrorKind::Domain, "power sums need a monic polynomial");
    // elementary symmetric e_i = (-1)^i coeff of X^(n-i)
    std::vector<Rational> el(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) el[i] = (i % 2 ? Rational(-f[n - i]) : f[n - i]);
    std::vector<Rational> ps(k + 1);
    for (unsigned m = 1; m <= k; ++m) {
        Rational s = 0;
        for (unsigned i = 1; i < m; ++i) {
            if (static_cast<int>(i) > n) break;
            s += ((i - 1) % 2 ? Rational(-el[i]) : el[i]) * ps[m - i];
        }
        if (static_cast<int>(m) <= n) s += ((m - 1) % 2 ? Rational(-1) : Rational(1)) * Rational(m) * el[m];
        ps[m] = s;
    }
    return ps;
}

/// Untwisted trace of Frob_p^k predicted from Q_p and the determinant sign.
inline Rational predicted_trace(const FrobeniusCharPoly& cp, unsigned k, int eps) {
    Rational t = power_sums(cp.Q, k)[k];
    return (eps < 0 && (k % 2)) ? Rational(-t) : t;
}

/// N_{p^k} = 1 + q^2 + q (2 + C + T_k).
inline Integer predict_count(const FrobeniusCharPoly& cp, unsigned k, int eps, long C) {
    Integer q = ipow(from_u64(cp.p), k);
    Rational N = Rational(1 + q * q) + Rational(q) * (2 + C + predicted_trace(cp, k, eps));
    N.canonicalize();
    if (!is_integral(N)) fail(ErrorKind::OracleMismatch, "predicted count is not an integer");
    return N.get_num();
}

/// Signs eps for which eps T1, T2 give an integral, pure Q_p.
inline std::vector<int> admissible_signs(const Rational& T1, const Rational& T2, std::uint64_t p) {
    std::vector<int> out;
    for (int eps : {1, -1}) {
        try {
            assemble_charpoly(eps * T1, T2, p);
            out.push_back(eps);
        } catch (const Error&) {
        }
    }
    return out;
}

/// Sign of the determinant at p read off the untwisted traces of Frob^1,2,3.
/// With eigenvalues {a, b, eps, 1/a, 1/b}: T3 = eps + S^3 - 3 P S - 3 S where
/// S = T1 - eps and P = (S^2 - T2 - 3)/2. Empty when both signs fit.
inline std::optional<int> local_determinant(const Rational& T1, const Rational& T2, const Rational& T3) {
    std::vector<int> fits;
    for (int eps : {1, -1}) {
        const Rational S = T1 - eps;
        const Rational P = (S * S - T2 - 3) / 2;
        if (eps + S * S * S - 3 * P * S - 3 * S == T3) fits.push_back(eps);
    }
    if (fits.empty()) fail(ErrorKind::OracleMismatch, "no determinant sign fits the cubic trace");
    if (fits.size() == 2) return std::nullopt;
    return fits.front();
}

}  // namespace ellsurf

#endif
