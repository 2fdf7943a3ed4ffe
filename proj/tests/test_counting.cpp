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

#include <random>

#include "oracles.hpp"

using namespace ellsurf;

namespace {

IntPoly I(const std::string& s) { return to_integer(parse_polynomial(s, "s")); }

struct Field {
    std::uint64_t p;
    unsigned k;
};

}  // namespace

TEST(CountCubic, AgreesWithEnumeration) {
    std::mt19937_64 rng(23);
    for (Field f : {Field{2, 1}, Field{2, 2}, Field{2, 3}, Field{3, 1}, Field{3, 2}, Field{5, 1}, Field{5, 2}, Field{7, 1}}) {
        FqContext K(f.p, f.k);
        std::uniform_int_distribution<std::uint32_t> pick(0, K.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::array<Elem, 5> a;
            for (auto& c : a) c = K.element(pick(rng));
            EXPECT_EQ(count_cubic(K, a), oracle::brute_cubic(K, a.data())) << f.p << "^" << f.k;
        }
    }
}

TEST(CountCubic, HasseBound) {
    FqContext K(11, 1);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> pick(0, 10);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<Elem, 5> a;
        for (auto& c : a) c = K.element(pick(rng));
        const long t = 12 - static_cast<long>(count_cubic(K, a));
        EXPECT_LE(t * t, 4 * 11);
    }
}

TEST(SurfaceCount, AgreesWithFibreEnumeration) {
    for (const char* id : {"x0", "case1", "case2", "case3i", "case3ii"}) {
        const auto& S = registry_lookup(id).surface;
        for (Field f : {Field{5, 1}, Field{5, 2}, Field{11, 1}, Field{13, 1}}) {
            if (std::string(id) == "case2" && f.p == 11) continue;
            FqContext K(f.p, f.k);
            const auto fast = surface_count(S, K);
            const auto slow = oracle::brute_surface_count(S, K);
            EXPECT_EQ(fast.N, slow.N) << id << " " << f.p << "^" << f.k;
            EXPECT_EQ(fast.C, slow.C) << id << " " << f.p << "^" << f.k;
        }
    }
}

TEST(SurfaceCount, EvenCharacteristic) {
    const auto& S = registry_lookup("case1").surface;
    for (unsigned k : {1u, 2u, 3u}) {
        FqContext K(2, k);
        const auto fast = surface_count(S, K);
        const auto slow = oracle::brute_surface_count(S, K);
        EXPECT_EQ(fast.N, slow.N) << k;
        EXPECT_EQ(fast.C, slow.C) << k;
    }
}

TEST(FibreReduction, NonsplitAndSplitNodes) {
    // y^2 = x^3 + c x^2 + s^2: a node at s = 0 with tangents y = +-sqrt(c) x
    FqContext K(5, 1);
    for (int c : {1, 2}) {
        const auto S = make_surface("node", {IntPoly(), IntPoly(c), IntPoly(), IntPoly(), I("s^2")});
        const auto r = classify_fiber_mod_q(S, K, K.zero());
        EXPECT_EQ(r.n, 2u);
        if (c == 1) {
            EXPECT_EQ(r.kind, ReductionKind::Split);
            EXPECT_EQ(r.smooth_points, 10u);
            EXPECT_EQ(r.component_trace, 1);
        } else {
            EXPECT_EQ(r.kind, ReductionKind::Nonsplit);
            EXPECT_EQ(r.smooth_points, 12u);
            EXPECT_EQ(r.component_trace, 1);
        }
    }
    // over F_25 every element of F_5 is a square, so the node splits
    FqContext K2(5, 2);
    const auto S = make_surface("node", {IntPoly(), IntPoly(2), IntPoly(), IntPoly(), I("s^2")});
    EXPECT_EQ(classify_fiber_mod_q(S, K2, K2.zero()).kind, ReductionKind::Split);
}

TEST(FibreReduction, OddNonsplit) {
    // y^2 = x^3 + 2 x^2 + s^3 has an I3 at s = 0, nonsplit over F_5
    FqContext K(5, 1);
    const auto S = make_surface("node", {IntPoly(), IntPoly(2), IntPoly(), IntPoly(), I("s^3")});
    const auto r = classify_fiber_mod_q(S, K, K.zero());
    EXPECT_EQ(r.n, 3u);
    EXPECT_EQ(r.kind, ReductionKind::Nonsplit);
    EXPECT_EQ(r.smooth_points, 7u);
    EXPECT_EQ(r.component_trace, 0);
}

TEST(FibreReduction, AdditiveAtGoodPrimeIsAnError) {
    FqContext K(5, 1);
    const auto S = make_surface("cusp", {IntPoly(), IntPoly(), IntPoly(), IntPoly(), I("s^2 + 1")});
    try {
        surface_count(S, K);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AdditiveFiberAtGoodPrime);
    }
}

TEST(Trace, CaseOneSmallPrimes) {
    const auto& S = registry_lookup("case1").surface;
    EXPECT_EQ(ntriv_trace(surface_count(S, FqContext(2, 1))), Rational(-1, 2));
    EXPECT_EQ(ntriv_trace(surface_count(S, FqContext(5, 1))), Rational(-4, 5));
}

TEST(Trace, FromCount) {
    EXPECT_EQ(ntriv_trace(1 + 25 + 2 * 5 + 3, 0, 5), Rational(3, 5));
}
