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

#include "oracles.hpp"

using namespace ellsurf;

namespace {

RatPoly X(const std::string& s) { return parse_polynomial(s, "x"); }

std::vector<long> field_ms(const std::vector<Integer>& S, int sign) {
    std::vector<long> out;
    for (const auto& K : enumerate_quadratic_fields(S, sign)) out.push_back(K.m.get_si());
    return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out(v.begin(), v.end());
    return out;
}

FrobeniusCharPoly from_string(std::uint64_t p, const std::string& q) {
    FrobeniusCharPoly cp;
    cp.p = p;
    cp.Q = X(q);
    std::tie(cp.s1, cp.e) = charpoly_decompose(cp.Q);
    return cp;
}

// A stream whose polynomials are all (x - 1)^5.
FrobeniusCharPoly trivial(std::uint64_t p) { return from_string(p, "(x - 1)^5"); }

}  // namespace

TEST(RootsOfUnity, DetectedInW) {
    EXPECT_TRUE(has_root_of_unity_root(X("(x^2 + 1)*(x^2 + 3*x + 1)")));
    EXPECT_TRUE(has_root_of_unity_root(X("(x^4 + x^3 + x^2 + x + 1)")));
    EXPECT_TRUE(has_root_of_unity_root(X("(x^2 - x + 1)*(x^2 + 1/2*x + 1)")));
    EXPECT_TRUE(has_root_of_unity_root(X("(x + 1)*(x^3 + 2)")));
    EXPECT_FALSE(has_root_of_unity_root(X("x^4 - 17/25*x^3 - 3/25*x^2 - 17/25*x + 1")));
    EXPECT_FALSE(has_root_of_unity_root(X("x^4 + x^3 + 2")));
    // a primitive 7th root has phi = 6 and never occurs in a quartic
    EXPECT_FALSE(has_root_of_unity_root(X("x^4 + 3*x^2 + 1")));
}

TEST(QuadraticFields, Enumeration) {
    EXPECT_EQ(field_ms(ints({3, 7}), 1), (std::vector<long>{21}));
    EXPECT_EQ(field_ms(ints({3, 7}), -1), (std::vector<long>{-3, -7}));
    EXPECT_EQ(field_ms(ints({3, 61, 307}), 1), (std::vector<long>{61, 921, 56181}));
    EXPECT_EQ(field_ms(ints({3, 61, 307}), -1), (std::vector<long>{-3, -183, -307, -18727}));
    EXPECT_EQ(field_ms(ints({2, 3}), 1), (std::vector<long>{2, 3, 6}));
    EXPECT_EQ(field_ms(ints({2, 3}), -1), (std::vector<long>{-1, -2, -3, -6}));
    EXPECT_EQ(field_ms(ints({2, 3, 7}), 1), (std::vector<long>{2, 3, 6, 7, 14, 21, 42}));
    EXPECT_EQ(field_ms(ints({2, 3, 7}), -1), (std::vector<long>{-1, -2, -3, -6, -7, -14, -21, -42}));
    EXPECT_EQ(field_ms(ints({7}), -1), (std::vector<long>{-7}));
    for (const auto& K : enumerate_quadratic_fields(ints({2, 3, 7}), -1)) {
        for (const auto& q : K.ramified()) EXPECT_TRUE(q == 2 || q == 3 || q == 7);
    }
    EXPECT_EQ(make_quadratic_field(Integer(-3)).disc, -3);
    EXPECT_EQ(make_quadratic_field(Integer(21)).disc, 21);
    EXPECT_EQ(make_quadratic_field(Integer(3)).disc, 12);
    EXPECT_EQ(make_quadratic_field(Integer(-1)).disc, -4);
}

TEST(Algorithm1, TrivialStreamNeverTerminates) {
    const auto out = algorithm_1(ints({3}), trivial, 50);
    EXPECT_FALSE(out.terminated);
    EXPECT_FALSE(out.witness.has_value());
    EXPECT_EQ(out.scan_bound, 50u);
}

TEST(Algorithm1, SkipsBadPrimes) {
    const auto& e = registry_lookup("case1");
    std::vector<FrobeniusCharPoly> table;
    for (const auto& [p, q] : e.table)
        if (q != "bad") table.push_back(from_string(p, q));
    const auto out = algorithm_1(ints({2, 3, 7}), table_lookup(table), 13);
    ASSERT_TRUE(out.terminated);
    EXPECT_EQ(*out.witness, 5u);
}

TEST(InertScan, CaseOne) {
    const auto& e = registry_lookup("case1");
    std::vector<FrobeniusCharPoly> table;
    for (const auto& [p, q] : e.table)
        if (q != "bad") table.push_back(from_string(p, q));
    const auto lookup = table_lookup(table);
    EXPECT_EQ(inert_scan(make_quadratic_field(Integer(21)), e.S, lookup, 13), std::optional<std::uint64_t>(2));
    EXPECT_EQ(inert_scan(make_quadratic_field(Integer(-3)), e.S, lookup, 13), std::optional<std::uint64_t>(2));
    EXPECT_EQ(inert_scan(make_quadratic_field(Integer(-7)), e.S, lookup, 13), std::optional<std::uint64_t>(5));
}

TEST(InertScan, VanishingAtMinusOneIsSkipped) {
    // Q(-1) = 0 for (x + 1)^2 (x - 1)^3; a stream of those gives no witness
    auto lookup = [](std::uint64_t p) { return from_string(p, "(x + 1)^2*(x - 1)^3"); };
    EXPECT_FALSE(inert_scan(make_quadratic_field(Integer(-1)), {}, lookup, 200).has_value());
}

TEST(Soundness, ReplacingWitnessPolynomialsRemovesWitnesses) {
    // swap every Q_p with Q_p(-1) != 0 for one that vanishes at -1: no field can terminate
    auto lookup = [](std::uint64_t p) {
        return p % 4 == 1 ? from_string(p, "(x + 1)^2*(x - 1)^3") : from_string(p, "(x + 1)^2*(x - 1)*(x^2 + 1)");
    };
    const auto a2 = field_algorithm(2, ints({2, 3}), lookup, 300);
    const auto a3 = field_algorithm(3, ints({2, 3}), lookup, 300);
    EXPECT_FALSE(a2.terminated);
    EXPECT_FALSE(a3.terminated);
    for (const auto& f : a2.fields) EXPECT_FALSE(f.witness.has_value());
}

TEST(Certify, MissingPolynomialSurfacesAsError) {
    const auto& e = registry_lookup("case3i");
    std::vector<FrobeniusCharPoly> table;
    for (const auto& [p, q] : e.table)
        if (q != "bad") table.push_back(from_string(p, q));
    try {
        certify("case3i", e.S, "pinned", table_lookup(table), 100, 100);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::MissingCharPoly);
    }
}

TEST(Certify, InconclusiveStreamHasHints) {
    const auto c = certify("trivial", ints({2, 3}), "pinned", trivial, 40, 40);
    EXPECT_EQ(c.conclusion, Conclusion::Inconclusive);
    // (x - 1)^5 does not vanish at -1, so only algorithm 1 fails
    EXPECT_TRUE(c.alg2.terminated && c.alg3.terminated);
    EXPECT_EQ(c.hints.size(), 1u);
    EXPECT_FALSE(c.charpolys.empty());
    EXPECT_STREQ(to_string(c.conclusion), "INCONCLUSIVE_UP_TO_BOUND");
}

TEST(Certify, MonotoneInTheBound) {
    FrobeniusEngine E(registry_lookup("case3ii").surface, registry_lookup("case3ii").S);
    bool seen = false;
    for (std::uint64_t bound : {7u, 11u, 13u, 17u, 23u}) {
        const auto c = certify("case3ii", E.bad_primes(), "pinned", E.lookup(), bound, bound);
        const bool ok = c.conclusion == Conclusion::LieIrreducibleSO5;
        EXPECT_TRUE(!seen || ok) << bound;
        seen = seen || ok;
        for (const auto& cp : c.charpolys) EXPECT_LE(cp.p, bound);
    }
    EXPECT_TRUE(seen);
}
