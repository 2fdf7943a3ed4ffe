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

#ifndef ELLSURF_BAD_PRIMES_HPP
#define ELLSURF_BAD_PRIMES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "modular.hpp"
#include "number_theory.hpp"
#include "polynomial_algorithms.hpp"
#include "surface.hpp"

namespace ellsurf {

struct BadPrimeReport {
    std::vector<Integer> candidates;  // ascending
    std::vector<Integer> refined;     // ascending, subset of candidates
    std::map<Integer, std::string> reasons;  // why a prime stayed in, or why it was dropped
    bool two_heuristic = false;       // refinement at 2 is a pattern check only
};

namespace detail {

/// Geometric multiplicity multiset of disc in characteristic 0, infinity included.
inline std::vector<unsigned> multiplicity_profile(const WeierstrassSurface& S) {
    std::vector<unsigned> out;
    for (const auto& [f, m] : squarefree_decomposition(to_rational(S.disc)))
        out.insert(out.end(), static_cast<std::size_t>(f.degree()), m);
    if (unsigned inf = order_at_infinity(S); inf > 0) out.push_back(inf);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<unsigned> multiplicity_profile_mod(const WeierstrassSurface& S, std::uint64_t p) {
    PrimeField F(p);
    ZpPoly d = zp::reduce(F, S.disc);
    std::vector<unsigned> out;
    for (const auto& [f, m] : zp::squarefree(F, d)) out.insert(out.end(), static_cast<std::size_t>(f.degree()), m);
    const int inf = static_cast<int>(12 * S.weight) - d.degree();
    if (inf > 0) out.push_back(static_cast<unsigned>(inf));
    std::sort(out.begin(), out.end());
    return out;
}

inline void add_prime_divisors(const Integer& v, std::set<Integer>& into) {
    if (v == 0) return;
    for (const auto& p : factor_integer(v).primes()) into.insert(p);
}

}  // namespace detail

/// Same reduction pattern as in characteristic 0: disc stays nonzero, the
/// geometric multiplicities (with infinity) agree, and c4 meets no zero of disc.
inline bool reduction_pattern_matches(const WeierstrassSurface& S, std::uint64_t p, std::string* why = nullptr) {
    auto say = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    PrimeField F(p);
    ZpPoly d = zp::reduce(F, S.disc);
    if (d.is_zero()) return say("disc vanishes mod p");
    if (detail::multiplicity_profile_mod(S, p) != detail::multiplicity_profile(S))
        return say("fibre multiplicities change mod p");
    ZpPoly c4 = zp::reduce(F, S.c4);
    if (zp::gcd(F, c4, d).degree() > 0) return say("c4 and disc share a root mod p");
    if (12 * S.weight > static_cast<unsigned>(d.degree()) && mod_u64(S.c4[4 * S.weight], p) == 0)
        return say("c4 vanishes at infinity mod p");
    if (why) *why = "reduction pattern unchanged";
    return true;
}

/// Candidates: 2, 3, and the primes of disc(disc_sf), Res(c4, disc_sf), lc(disc),
/// and of c4 at infinity when infinity is a bad fibre. Refinement drops primes
/// whose reduction pattern matches characteristic 0; 3 is never dropped.
inline BadPrimeReport bad_primes(const WeierstrassSurface& S) {
    std::set<Integer> cand{Integer(2), Integer(3)};
    RatPoly sf(1);
    for (const auto& [f, m] : squarefree_decomposition(to_rational(S.disc))) sf = sf * f;
    IntPoly sfi = rational_content(sf).second;
    if (sfi.degree() >= 1) {
        detail::add_prime_divisors(discriminant(to_rational(sfi)).get_num(), cand);
        detail::add_prime_divisors(resultant(S.c4, sfi), cand);
    }
    detail::add_prime_divisors(S.disc.leading(), cand);
    if (order_at_infinity(S) > 0) detail::add_prime_divisors(S.c4[4 * S.weight], cand);

    BadPrimeReport R;
    R.candidates.assign(cand.begin(), cand.end());
    for (const auto& p : R.candidates) {
        std::string why;
        bool same = reduction_pattern_matches(S, mod_u64(p, ~std::uint64_t{0}), &why);
        if (p == 3) {
            R.refined.push_back(p);
            R.reasons[p] = "kept: residue characteristic 3 (" + why + ")";
            continue;
        }
        if (p == 2) R.two_heuristic = true;
        if (same) {
            R.reasons[p] = "dropped: " + why + (p == 2 ? " (heuristic at 2)" : "");
        } else {
            R.refined.push_back(p);
            R.reasons[p] = "kept: " + why;
        }
    }
    return R;
}

}  // namespace ellsurf

#endif
