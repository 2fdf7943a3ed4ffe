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

#ifndef ELLSURF_INTEGER_HPP
#define ELLSURF_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace ellsurf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::Domain, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer igcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact quotient; the caller guarantees b | a.
inline Integer exact_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Least non-negative residue of a modulo m (m > 0).
inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
    Integer r;
    Integer mm(std::to_string(m));
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
    return std::stoull(r.get_str());
}

inline Integer from_u64(std::uint64_t v) { return Integer(std::to_string(v)); }
inline Integer from_i64(std::int64_t v) { return Integer(std::to_string(v)); }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

/// p-adic valuation of a nonzero integer.
inline unsigned valuation(Integer n, const Integer& p) {
    if (n == 0) fail(ErrorKind::Domain, "valuation of zero");
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n = exact_div(n, p);
        ++v;
    }
    return v;
}

}  // namespace ellsurf

#endif
