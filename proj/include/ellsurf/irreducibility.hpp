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

#ifndef ELLSURF_IRREDUCIBILITY_HPP
#define ELLSURF_IRREDUCIBILITY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charpoly.hpp"
#include "errors.hpp"
#include "number_theory.hpp"
#include "polynomial_algorithms.hpp"

namespace ellsurf {

/// Recovers (s1, e) from Q_p by dividing out X - 1.
inline std::pair<Rational, Rational> charpoly_decompose(const RatPoly& Q) {
    if (Q.degree() != 5 || Q.leading() != 1) fail(ErrorKind::Input, "expected a monic quintic");
    if (Q(Rational(1)) != 0) fail(ErrorKind::Input, "X = 1 is not a root");
    RatPoly quartic = Q / RatPoly{Rational(-1), Rational(1)};
    for (int i = 0; i <= 4; ++i)
        if (quartic[i] != quartic[4 - i]) fail(ErrorKind::Input, "quartic factor is not palindromic");
    if (quartic[0] != 1) fail(ErrorKind::Input, "quartic factor has constant term != 1");
    return {-quartic[3], quartic[2] - 2};
}

/// Quartic whose roots are ab, 1/(ab), a/b, b/a.
inline RatPoly pair_product_quartic(const Rational& s1, const Rational& e) {
    return RatPoly{Rational(1), -e, s1 * s1 - 2 * e - 2, -e, Rational(1)};
}

/// Orders n with phi(n) <= 4.
inline const std::vector<unsigned>& small_cyclotomic_orders() {
    static const std::vector<unsigned> orders{1, 2, 3, 4, 5, 6, 8, 10, 12};
    return orders;
}

inline bool has_root_of_unity_root(const RatPoly& W) {
    for (unsigned n : small_cyclotomic_orders())
        if (gcd(W, to_rational(cyclotomic(n))).degree() > 0) return true;
    return false;
}

struct QuadraticField {
    Integer m;     // squarefree, != 0, 1
    Integer disc;  // m or 4m
    bool real() const { return m > 0; }
    std::vector<Integer> ramified() const { return factor_integer(disc).primes(); }
};

inline QuadraticField make_quadratic_field(const Integer& m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), m.get_mpz_t(), 4);
    return QuadraticField{m, r == 1 ? m : Integer(4 * m)};
}

/// Quadratic fields of the given sign (+1 real, -1 imaginary) unramified
/// outside S, ordered by |m|.
inline std::vector<QuadraticField> enumerate_quadratic_fields(const std::vector<Integer>& S, int sign) {
    std::vector<Integer> primes(S);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    const bool two = std::find(primes.begin(), primes.end(), Integer(2)) != primes.end();
    std::vector<QuadraticField> out;
    const std::size_t n = primes.size();
    if (n > 20) fail(ErrorKind::Domain, "too many primes in S");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Integer m = sign > 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) m *= primes[i];
        if (m == 1) continue;
        QuadraticField K = make_quadratic_field(m);
        if (!two && K.disc != m) continue;
        out.push_back(K);
    }
    std::sort(out.begin(), out.end(), [](const QuadraticField& a, const QuadraticField& b) { return abs(a.m) < abs(b.m); });
    return out;
}

/// Answers Q_p for a good prime p; throws MissingCharPoly when it cannot.
using CharPolyLookup = std::function<FrobeniusCharPoly(std::uint64_t)>;

/// Lookup over a fixed set of char polys; asking for any other prime fails.
inline CharPolyLookup table_lookup(std::vector<FrobeniusCharPoly> table) {
    return [table = std::move(table)](std::uint64_t p) {
        for (const auto& cp : table)
            if (cp.p == p) return cp;
        fail(ErrorKind::MissingCharPoly, "no characteristic polynomial at p = " + std::to_string(p));
    };
}

struct FieldWitness {
    QuadraticField field;
    std::optional<std::uint64_t> witness;
};

struct AlgorithmOutcome {
    int id = 1;
    bool terminated = false;
    std::optional<std::uint64_t> witness;  // algorithm 1
    std::vector<FieldWitness> fields;      // algorithms 2 and 3
    std::uint64_t scan_bound = 0;
};

namespace detail {
inline bool in_set(const std::vector<Integer>& S, std::uint64_t p) {
    return std::find(S.begin(), S.end(), from_u64(p)) != S.end();
}
}  // namespace detail

/// First good prime where neither ab nor a/b is a root of unity.
inline AlgorithmOutcome algorithm_1(const std::vector<Integer>& S, const CharPolyLookup& lookup, std::uint64_t bound) {
    AlgorithmOutcome out;
    out.id = 1;
    out.scan_bound = bound;
    for (std::uint64_t p : primes_up_to(bound)) {
        if (detail::in_set(S, p)) continue;
        const FrobeniusCharPoly cp = lookup(p);
        auto [s1, e] = charpoly_decompose(cp.Q);
        if (!has_root_of_unity_root(pair_product_quartic(s1, e))) {
            out.terminated = true;
            out.witness = p;
            return out;
        }
    }
    return out;
}

/// Least prime p outside S, inert in K, with Q_p(-1) != 0.
inline std::optional<std::uint64_t> inert_scan(const QuadraticField& K, const std::vector<Integer>& S,
                                               const CharPolyLookup& lookup, std::uint64_t bound) {
    for (std::uint64_t p : primes_up_to(bound)) {
        if (detail::in_set(S, p)) continue;
        if (kronecker(K.disc, from_u64(p)) != -1) continue;
        if (lookup(p).Q(Rational(-1)) != 0) return p;
    }
    return std::nullopt;
}

/// Algorithm 2 (sign +1) or 3 (sign -1).
inline AlgorithmOutcome field_algorithm(int id, const std::vector<Integer>& S, const CharPolyLookup& lookup,
                                        std::uint64_t bound) {
    AlgorithmOutcome out;
    out.id = id;
    out.scan_bound = bound;
    out.terminated = true;
    for (const auto& K : enumerate_quadratic_fields(S, id == 2 ? 1 : -1)) {
        FieldWitness w{K, inert_scan(K, S, lookup, bound)};
        if (!w.witness) out.terminated = false;
        out.fields.push_back(std::move(w));
    }
    return out;
}

enum class Conclusion { LieIrreducibleSO5, Inconclusive };

inline const char* to_string(Conclusion c) {
    return c == Conclusion::LieIrreducibleSO5 ? "LIE_IRREDUCIBLE_ALMOST_ALL_L_SO5" : "INCONCLUSIVE_UP_TO_BOUND";
}

struct IrreducibilityCertificate {
    std::string surface;
    std::vector<Integer> S;
    std::string S_provenance;  // "pinned" or "computed"
    std::vector<FrobeniusCharPoly> charpolys;
    std::optional<Integer> determinant;  // D with det(Frob_p) = (D/p), when known
    AlgorithmOutcome alg1, alg2, alg3;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::vector<std::string> hints;
    std::vector<std::string> assumptions{
        "self-dual of weight 0 after twist",
        "Hodge-Tate weights {-1,-1,0,1,1}",
        "complex conjugation has trace 1 or -1",
    };
};

/// Runs the three algorithms; the lookup is called only at primes they need.
inline IrreducibilityCertificate certify(const std::string& surface, const std::vector<Integer>& S,
                                         const std::string& provenance, const CharPolyLookup& lookup,
                                         std::uint64_t prime_bound, std::uint64_t field_bound) {
    IrreducibilityCertificate c;
    c.surface = surface;
    c.S = S;
    c.S_provenance = provenance;
    std::vector<FrobeniusCharPoly> seen;
    CharPolyLookup record = [&](std::uint64_t p) {
        for (const auto& cp : seen)
            if (cp.p == p) return cp;
        FrobeniusCharPoly cp = lookup(p);
        seen.push_back(cp);
        return cp;
    };
    c.alg1 = algorithm_1(S, record, prime_bound);
    c.alg2 = field_algorithm(2, S, record, field_bound);
    c.alg3 = field_algorithm(3, S, record, field_bound);
    std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
    c.charpolys = std::move(seen);
    const bool all = c.alg1.terminated && c.alg2.terminated && c.alg3.terminated;
    c.conclusion = all ? Conclusion::LieIrreducibleSO5 : Conclusion::Inconclusive;
    if (!c.alg1.terminated)
        c.hints.push_back("algorithm 1 found no prime with ab, a/b both non-roots of unity; an induced or tensor "
                          "decomposition is not excluded up to the bound");
    for (const auto* o : {&c.alg2, &c.alg3})
        for (const auto& f : o->fields)
            if (!f.witness)
                c.hints.push_back("no inert witness for Q(sqrt(" + f.field.m.get_str() +
                                  ")); a representation induced from this field is not excluded up to the bound");
    return c;
}

}  // namespace ellsurf

#endif
