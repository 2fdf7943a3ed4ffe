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

#ifndef ELLSURF_NUMBER_THEORY_HPP
#define ELLSURF_NUMBER_THEORY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace ellsurf {

/// Primes up to n by a plain sieve.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

inline bool is_prime_u64_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Full Kronecker symbol (a|n), including n even, n negative and n = 0.
inline int kronecker(Integer a, Integer n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // strip factors of two from n
    unsigned twos = 0;
    while (mpz_even_p(n.get_mpz_t())) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (mpz_even_p(a.get_mpz_t())) return 0;
        if (twos & 1) {
            unsigned long r8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
            if (r8 == 3 || r8 == 5) result = -result;
        }
    }
    // n is now odd and positive: Jacobi symbol by reciprocity
    a = a % n;
    if (a < 0) a += n;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            unsigned long r8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
        a = a % n;
    }
    return n == 1 ? result : 0;
}

inline int kronecker(long a, long n) { return kronecker(Integer(a), Integer(n)); }

namespace detail {

inline Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool miller_rabin_round(const Integer& n, const Integer& base) {
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    Integer x = powmod(base % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Beyond this bound the first thirteen prime bases are no longer a proof.
inline const Integer& deterministic_mr_limit() {
    static const Integer limit("3317044064679887385961981");
    return limit;
}

inline const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = primes_up_to(1000000);
    return primes;
}

}  // namespace detail

struct PrimeFactorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned>> factors;  // strictly increasing primes

    Integer value() const {
        Integer v = sign;
        for (const auto& [p, e] : factors) v *= ipow(p, e);
        return v;
    }
    std::vector<Integer> primes() const {
        std::vector<Integer> out;
        for (const auto& f : factors) out.push_back(f.first);
        return out;
    }
};

struct FactorOptions {
    std::uint64_t trial_bound = 1000000;
    std::uint64_t rho_iterations = 2000000;  // per cofactor attempt
};

PrimeFactorization factor_integer(const Integer& n, const FactorOptions& opt = {});

/// Primality with a proof: deterministic Miller-Rabin below 3.3e24, and a
/// Pocklington certificate built from a factorization of n-1 above it.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u})
        if (!detail::miller_rabin_round(n, Integer(static_cast<unsigned long>(p)))) return false;
    if (n < detail::deterministic_mr_limit()) return true;

    // Pocklington: need the factored part F of n-1 with F^2 > n.
    PrimeFactorization nm1 = factor_integer(n - 1);
    Integer factored = 1;
    for (const auto& [q, e] : nm1.factors) factored *= ipow(q, e);
    if (factored * factored <= n) fail(ErrorKind::UncertifiedPrime, n.get_str());
    for (const auto& [q, e] : nm1.factors) {
        bool witnessed = false;
        for (unsigned long a = 2; a < 200 && !witnessed; ++a) {
            if (detail::powmod(Integer(a), n - 1, n) != 1) return false;
            Integer t = detail::powmod(Integer(a), (n - 1) / q, n) - 1;
            if (igcd(t, n) == 1) witnessed = true;
        }
        if (!witnessed) fail(ErrorKind::UncertifiedPrime, n.get_str());
    }
    return true;
}

namespace detail {

/// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
inline Integer pollard_brent(const Integer& n, unsigned long c, std::uint64_t budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    Integer y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1, used = 0;
    const std::uint64_t m = 128;
    while (g == 1 && used < budget) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                Integer d = x - y;
                if (d < 0) d = -d;
                q = (q * d) % n;
            }
            g = igcd(q, n);
            k += lim;
            used += lim;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            Integer d = x - ys;
            if (d < 0) d = -d;
            g = igcd(d, n);
        } while (g == 1);
    }
    if (g == 1 || g == n) return 0;
    return g;
}

inline void split_cofactor(const Integer& n, std::map<Integer, unsigned>& out, const FactorOptions& opt) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        split_cofactor(r, out, opt);
        split_cofactor(r, out, opt);
        return;
    }
    for (unsigned long c = 1; c < 8; ++c) {
        Integer d = pollard_brent(n, c, opt.rho_iterations);
        if (d != 0) {
            split_cofactor(d, out, opt);
            split_cofactor(n / d, out, opt);
            return;
        }
    }
    fail(ErrorKind::UnfactoredCofactor, n.get_str());
}

}  // namespace detail

/// Trial division to opt.trial_bound, then Pollard-Brent on what is left.
/// A cofactor that survives the rho budget raises UnfactoredCofactor.
inline PrimeFactorization factor_integer(const Integer& n, const FactorOptions& opt) {
    if (n == 0) fail(ErrorKind::Domain, "factor_integer(0)");
    PrimeFactorization out;
    Integer m = n;
    if (m < 0) {
        out.sign = -1;
        m = -m;
    }
    std::map<Integer, unsigned> found;
    for (std::uint64_t p : detail::small_primes()) {
        if (p > opt.trial_bound) break;
        if (Integer(static_cast<unsigned long>(p)) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= static_cast<unsigned long>(p);
            ++found[Integer(static_cast<unsigned long>(p))];
        }
    }
    if (m > 1) detail::split_cofactor(m, found, opt);
    for (const auto& [p, e] : found) out.factors.emplace_back(p, e);
    return out;
}

}  // namespace ellsurf

#endif
