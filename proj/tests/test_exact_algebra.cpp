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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace ellsurf;

namespace {

RatPoly P(const std::string& s, const std::string& var = "s") { return parse_polynomial(s, var); }
IntPoly I(const std::string& s) { return to_integer(P(s)); }

RatPoly power(const RatPoly& f, unsigned m) {
    RatPoly r(1);
    for (unsigned i = 0; i < m; ++i) r = r * f;
    return r;
}

}  // namespace

TEST(Kronecker, AgreesWithGmpOnRandomPairs) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int i = 0; i < 2000; ++i) {
        const Integer a(d(rng)), n(d(rng));
        EXPECT_EQ(kronecker(a, n), mpz_kronecker(a.get_mpz_t(), n.get_mpz_t())) << a << " " << n;
    }
}

TEST(Kronecker, MultiplicativeInBothArguments) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-5000, 5000);
    for (int i = 0; i < 1000; ++i) {
        const Integer a(d(rng)), b(d(rng)), n(d(rng));
        EXPECT_EQ(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
        EXPECT_EQ(kronecker(a, b * n), kronecker(a, b) * kronecker(a, n));
    }
}

TEST(Kronecker, SmallValues) {
    EXPECT_EQ(kronecker(61L, 2L), -1);
    EXPECT_EQ(kronecker(21L, 11L), -1);
    EXPECT_EQ(kronecker(-3L, 5L), -1);
    EXPECT_EQ(kronecker(-7L, 5L), -1);
    EXPECT_EQ(kronecker(5L, 0L), 0);
    EXPECT_EQ(kronecker(-1L, 0L), 1);
}

TEST(Primes, SieveAndMillerRabinAgree) {
    const auto ps = primes_up_to(5000);
    std::set<std::uint64_t> s(ps.begin(), ps.end());
    for (std::uint64_t n = 0; n <= 5000; ++n) EXPECT_EQ(is_prime(from_u64(n)), s.count(n) == 1) << n;
}

TEST(Primes, LargePrimeNeedsPocklington) {
    // 2^89 - 1 is a Mersenne prime above the deterministic Miller-Rabin range
    const Integer m89 = ipow(Integer(2), 89) - 1;
    EXPECT_TRUE(is_prime(m89));
    EXPECT_FALSE(is_prime(m89 * 3));
    EXPECT_FALSE(is_prime(ipow(Integer(2), 91) - 1));
}

TEST(Factor, ReconstructsValue) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(2, 1000000000L);
    for (int i = 0; i < 200; ++i) {
        const Integer n = Integer(d(rng)) * Integer(d(rng)) * (i % 2 ? -1 : 1);
        const PrimeFactorization f = factor_integer(n);
        EXPECT_EQ(f.value(), n);
        for (const auto& [p, e] : f.factors) EXPECT_TRUE(is_prime(p));
    }
    EXPECT_THROW(factor_integer(Integer(0)), Error);
}

TEST(Factor, CaseTwoDiscriminant) {
    const auto f = factor_integer(Integer(-18727));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].first, 61);
    EXPECT_EQ(f.factors[1].first, 307);
}

TEST(Polynomial, ArithmeticAndDivision) {
    const RatPoly f = P("s^3 - 2*s + 1"), g = P("s - 1");
    auto [q, r] = divmod(f, g);
    EXPECT_EQ(q, P("s^2 + s - 1"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(f * g, P("s^4 - s^3 - 2*s^2 + 3*s - 1"));
    EXPECT_EQ(f(Rational(2)), Rational(5));
}

TEST(Resultant, MatchesSylvesterDeterminant) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const IntPoly f = oracle::random_intpoly(rng, 1 + i % 5, 20);
        const IntPoly g = oracle::random_intpoly(rng, 1 + (i / 5) % 4, 20);
        EXPECT_EQ(resultant(f, g), oracle::sylvester_resultant(f, g)) << to_string(f) << " , " << to_string(g);
    }
}

TEST(Resultant, KnownValues) {
    EXPECT_EQ(discriminant(P("3*s^2 - 3*s + 1")), Rational(-3));
    EXPECT_EQ(discriminant(P("s^3 - s - 1")), Rational(-23));
    EXPECT_EQ(resultant(I("s^2 + 1"), I("s - 4")), Integer(17));
}

TEST(Resultant, QuarticFactorOfCaseOne) {
    // the quartic factor of the case (1) discriminant
    const Rational d = discriminant(P("9*s^4 - 9*s^3 - 3*s^2 + 3*s + 1"));
    const auto f = factor_integer(abs(d.get_num()) * d.get_den());
    std::set<Integer> primes;
    for (const auto& [p, e] : f.factors) primes.insert(p);
    EXPECT_EQ(primes, (std::set<Integer>{3, 7}));
}

TEST(Gcd, SubresultantGcd) {
    const IntPoly a = I("(s - 1)^2*(s + 2)*(3*s + 1)"), b = I("(s - 1)*(3*s + 1)*(s^2 + 5)");
    EXPECT_EQ(gcd(a, b), I("3*s^2 - 2*s - 1"));
    EXPECT_EQ(gcd(to_rational(a), to_rational(b)), P("s^2 - 2/3*s - 1/3"));
}

TEST(SquareFree, YunDecomposition) {
    const auto d = squarefree_decomposition(P("s^18*(s - 1)^9*(3*s^2 - 3*s + 1)"));
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0], std::make_pair(P("s^2 - s + 1/3"), 1u));
    EXPECT_EQ(d[1], std::make_pair(P("s - 1"), 9u));
    EXPECT_EQ(d[2], std::make_pair(P("s"), 18u));
}

TEST(Factorization, ProductReconstructs) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        const IntPoly f = oracle::random_intpoly(rng, 2, 6) * oracle::random_intpoly(rng, 3, 6) *
                          oracle::random_intpoly(rng, 1 + i % 3, 6);
        const RatPoly F = to_rational(f);
        RatPoly prod(F.leading());
        for (const auto& [g, m] : factor_rational(F)) {
            EXPECT_EQ(g.leading(), 1);
            prod = prod * power(g, m);
        }
        EXPECT_EQ(prod, F);
    }
}

TEST(Factorization, SwinnertonDyerStyleIrreducible) {
    // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Q
    const auto f = factor_rational(P("s^4 - 10*s^2 + 1"));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].second, 1u);
    const auto g = factor_rational(P("s^6 - 1"));
    EXPECT_EQ(g.size(), 4u);
}

TEST(Cyclotomic, DegreesAndPairwiseCoprime) {
    for (unsigned n = 1; n <= 12; ++n) {
        EXPECT_EQ(cyclotomic(n).degree(), static_cast<int>(euler_phi(n)));
        for (unsigned m = 1; m < n; ++m) EXPECT_EQ(gcd(cyclotomic(n), cyclotomic(m)), IntPoly(1)) << n << "," << m;
    }
    EXPECT_EQ(cyclotomic(12), I("s^4 - s^2 + 1"));
    // prod_{d | 12} Phi_d = s^12 - 1
    IntPoly prod(1);
    for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u}) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, I("s^12 - 1"));
}

TEST(Parse, AcceptsExplicitSyntax) {
    EXPECT_EQ(P("1 + 3*s^2*(s-1)"), P("3*s^3 - 3*s^2 + 1"));
    EXPECT_EQ(P("-16/27*s^3 + 3/2"), RatPoly({Rational(3, 2), Rational(0), Rational(0), Rational(-16, 27)}));
    EXPECT_EQ(P("(s-1)^3"), P("s^3 - 3*s^2 + 3*s - 1"));
    EXPECT_EQ(P("s/2"), P("1/2*s"));
    EXPECT_EQ(P("t + 3", "t"), RatPoly({Rational(3), Rational(1)}));
}

TEST(Parse, RejectsAmbiguity) {
    for (const char* bad : {"2s", "s^2^3", "1/s", "s +", "x + 1", "(s", "s^-1", "", "3 s"}) {
        try {
            P(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
        }
    }
}

TEST(Parse, RoundTripsThroughToString) {
    for (const char* s : {"x^5 - 1/2*x^4 + 3/4*x^3 - 3/4*x^2 + 1/2*x - 1", "x^5 - 22/49*x^3 + 22/49*x^2 - 1"})
        EXPECT_EQ(to_string(P(s, "x"), "x"), s);
}

TEST(FiniteField, AxiomsOnSmallFields) {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {5, 3}, {7, 2}}) {
        FqContext K(p, k);
        const std::uint32_t q = K.size();
        ASSERT_EQ(q, static_cast<std::uint32_t>(std::pow(p, k)));
        for (std::uint32_t i = 0; i < q; ++i) {
            const Elem a = K.element(i);
            EXPECT_EQ(K.add(a, K.zero()), a);
            EXPECT_EQ(K.mul(a, K.one()), a);
            EXPECT_TRUE(K.is_zero(K.add(a, K.neg(a))));
            if (!K.is_zero(a)) {
                EXPECT_EQ(K.mul(a, K.inv(a)), K.one());
            }
            EXPECT_EQ(K.pow(a, q), a);
            for (std::uint32_t j = 0; j < q; j += 3) {
                const Elem b = K.element(j), c = K.element((i + j) % q);
                EXPECT_EQ(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c)));
                EXPECT_EQ(K.add(K.add(a, b), c), K.add(a, K.add(b, c)));
            }
        }
        // Frobenius is additive
        for (std::uint32_t i = 0; i < q; ++i)
            for (std::uint32_t j = 0; j < q; ++j) {
                const Elem a = K.element(i), b = K.element(j);
                ASSERT_EQ(K.frobenius(K.add(a, b)), K.add(K.frobenius(a), K.frobenius(b)));
            }
    }
}

TEST(FiniteField, QuadraticCharacterCountsSquares) {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {5, 2}, {7, 1}, {3, 3}}) {
        FqContext K(p, k);
        std::set<Elem> squares;
        for (std::uint32_t i = 1; i < K.size(); ++i) squares.insert(K.square(K.element(i)));
        for (std::uint32_t i = 1; i < K.size(); ++i) {
            const Elem a = K.element(i);
            EXPECT_EQ(K.chi(a), squares.count(a) ? 1 : -1);
        }
    }
}

TEST(FiniteField, RootsOfTrinomial) {
    const IntPoly f = I("s^2 + s + 1");
    EXPECT_EQ(fq_roots(FqContext(2, 1), f).size(), 0u);
    EXPECT_EQ(fq_roots(FqContext(2, 2), f).size(), 2u);
    const auto r9 = fq_roots(FqContext(3, 2), f);
    ASSERT_EQ(r9.size(), 1u);
    EXPECT_EQ(r9[0].second, 2u);
}

TEST(Modular, SquarefreeFactorizationModP) {
    const PrimeField F(7);
    const auto f = zp::reduce(F, I("s^6 - 1"));
    const auto fs = zp::factor_squarefree(F, f);
    EXPECT_EQ(fs.size(), 6u);  // 7 = 1 mod 6, all roots rational
}
