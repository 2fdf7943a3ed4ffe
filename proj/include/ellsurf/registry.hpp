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

#ifndef ELLSURF_REGISTRY_HPP
#define ELLSURF_REGISTRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cover.hpp"
#include "errors.hpp"
#include "parse.hpp"
#include "surface.hpp"

namespace ellsurf {

/// Expected witness of an inert scan: field m and prime p.
struct ExpectedWitness {
    long m;
    std::uint64_t p;
};

struct RegistryEntry {
    std::string id;
    std::string title;
    std::string a1, a3;  // as printed
    WeierstrassSurface surface;
    std::optional<RationalMap> map;  // to X0, for the covers
    std::vector<Integer> S;
    std::vector<std::pair<std::uint64_t, std::string>> table;  // prime -> Q_p in x, "bad" for bad rows
    std::uint64_t alg1_witness = 0;
    std::vector<ExpectedWitness> real_witnesses, imaginary_witnesses;
    std::array<std::string, 3> ramification;  // above t = 0, t = inf, roots of t^2 + 9t + 27
};

namespace detail {

inline WeierstrassSurface registry_surface(const std::string& id, const std::string& a1, const std::string& a3,
                                           const std::string& var = "s") {
    std::array<RatPoly, 5> raw{parse_polynomial(a1, var), RatPoly(), parse_polynomial(a3, var), RatPoly(), RatPoly()};
    return normalize_integral_model(id, raw);
}

inline RationalMap registry_map(const std::string& num, const std::string& den) {
    return make_rational_map(parse_polynomial(num), parse_polynomial(den));
}

inline std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

inline std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> R;
    const std::string bad = "bad";

    RegistryEntry x0;
    x0.id = "x0";
    x0.title = "X0: y^2 + (t+3)xy + y = x^3";
    x0.a1 = "t + 3";
    x0.a3 = "1";
    x0.surface = registry_surface("x0", x0.a1, x0.a3, "t");
    R.push_back(std::move(x0));

    RegistryEntry c1;
    c1.id = "case1";
    c1.title = "Case (1)";
    c1.a1 = "1 + 3*s^2*(s-1)";
    c1.a3 = "s^6*(s-1)^3";
    c1.surface = registry_surface("case1", c1.a1, c1.a3);
    c1.map = registry_map("1", "s^2*(s-1)");
    c1.S = ints({3, 7});
    c1.table = {{2, "x^5 - 1/2*x^4 + 3/4*x^3 - 3/4*x^2 + 1/2*x - 1"},
                {3, bad},
                {5, "x^5 + 4/5*x^4 + 22/25*x^3 - 22/25*x^2 - 4/5*x - 1"},
                {7, bad},
                {11, "x^5 + 14/11*x^4 + 42/121*x^3 - 42/121*x^2 - 14/11*x - 1"},
                {13, "x^5 - 6/13*x^4 - 4/169*x^3 + 4/169*x^2 + 6/13*x - 1"}};
    c1.alg1_witness = 5;
    c1.real_witnesses = {{21, 11}};
    c1.imaginary_witnesses = {{-3, 5}, {-7, 5}};
    c1.ramification = {"3", "1+2", "(1+1+1)+(1+1+1)"};
    R.push_back(std::move(c1));

    RegistryEntry c2;
    c2.id = "case2";
    c2.title = "Case (2)";
    c2.a1 = "s^2*(s-1) + 3";
    c2.a3 = "1";
    c2.surface = registry_surface("case2", c2.a1, c2.a3);
    c2.map = registry_map("s^2*(s-1)", "1");
    c2.S = ints({3, 61, 307});
    c2.table = {{2, "x^5 - 1/2*x^4 + 3/4*x^3 - 3/4*x^2 + 1/2*x - 1"},
                {3, bad},
                {5, "x^5 + 4/5*x^4 - 2/25*x^3 + 2/25*x^2 - 4/5*x - 1"},
                {7, "x^5 - 22/49*x^3 + 22/49*x^2 - 1"},
                {11, "x^5 - x^4 + 58/121*x^3 - 58/121*x^2 + x - 1"},
                {13, "x^5 - 6/13*x^4 - 4/169*x^3 + 4/169*x^2 + 6/13*x - 1"}};
    c2.alg1_witness = 5;
    c2.real_witnesses = {{61, 2}, {921, 11}, {56181, 2}};
    c2.imaginary_witnesses = {{-3, 2}, {-183, 5}, {-307, 2}, {-18727, 5}};
    c2.ramification = {"1+2", "3", "(1+1+1)+(1+1+1)"};
    R.push_back(std::move(c2));

    const std::vector<std::pair<std::uint64_t, std::string>> table3i = {
        {2, bad},
        {3, bad},
        {5, "x^5 + 4/5*x^4 - 1/5*x^3 + 1/5*x^2 - 4/5*x - 1"},
        {7, "x^5 + 4/7*x^4 - 5/49*x^3 + 5/49*x^2 - 4/7*x - 1"},
        {11, "x^5 - 2/11*x^4 - 13/11*x^3 + 13/11*x^2 + 2/11*x - 1"},
        {13, "x^5 + 19/13*x^4 + 142/169*x^3 - 142/169*x^2 - 19/13*x - 1"}};
    const std::vector<std::pair<std::uint64_t, std::string>> table3ii = {
        {2, bad},
        {3, bad},
        {5, "x^5 + 1/5*x^4 - 2/25*x^3 + 2/25*x^2 - 1/5*x - 1"},
        {7, bad},
        {11, "x^5 - 2/11*x^4 + 19/121*x^3 - 19/121*x^2 + 2/11*x - 1"},
        {13, "x^5 + 1/13*x^4 - 56/169*x^3 + 56/169*x^2 - 1/13*x - 1"},
        {17, "x^5 - 11/17*x^4 - 404/289*x^3 + 404/289*x^2 + 11/17*x - 1"}};
    const std::vector<ExpectedWitness> real23 = {{2, 5}, {3, 5}, {6, 13}};
    const std::vector<ExpectedWitness> imag23 = {{-1, 11}, {-2, 5}, {-3, 5}, {-6, 13}};
    const std::vector<ExpectedWitness> real237 = {{2, 5}, {3, 5}, {6, 13}, {7, 5}, {14, 17}, {21, 13}, {42, 5}};
    const std::vector<ExpectedWitness> imag237 = {{-1, 11}, {-2, 5},   {-3, 5},   {-6, 13},
                                                  {-7, 5},  {-14, 17}, {-21, 13}, {-42, 5}};

    RegistryEntry c3i;
    c3i.id = "case3i";
    c3i.title = "Case (3), first subcase";
    c3i.a1 = "-4*s^3 - 3*s + 1";
    c3i.a3 = "s^3";
    c3i.surface = registry_surface("case3i", c3i.a1, c3i.a3);
    c3i.map = registry_map("-4*s^3 - 6*s + 1", "s");
    c3i.S = ints({2, 3});
    c3i.table = table3i;
    c3i.alg1_witness = 5;
    c3i.real_witnesses = real23;
    c3i.imaginary_witnesses = imag23;
    c3i.ramification = {"1+1+1", "1+2", "(1+2)+(1+2)"};
    R.push_back(std::move(c3i));

    RegistryEntry c3ii;
    c3ii.id = "case3ii";
    c3ii.title = "Case (3), second subcase";
    c3ii.a1 = "-16/27*s^3 + 3/2";
    c3ii.a3 = "(s-1)^3";
    c3ii.surface = registry_surface("case3ii", c3ii.a1, c3ii.a3);
    c3ii.map = registry_map("-16/27*s^3 - 3*s + 9/2", "s - 1");
    c3ii.S = ints({2, 3, 7});
    c3ii.table = table3ii;
    c3ii.alg1_witness = 5;
    c3ii.real_witnesses = real237;
    c3ii.imaginary_witnesses = imag237;
    c3ii.ramification = {"1+1+1", "1+2", "(1+2)+(1+2)"};
    R.push_back(std::move(c3ii));

    RegistryEntry c4i;
    c4i.id = "case4i";
    c4i.title = "Case (4), first subcase";
    c4i.a1 = "-12*s^3 + 6561*s + 59049";
    c4i.a3 = "(-4*s^3 - 4374*s + 19683)^3";
    c4i.surface = registry_surface("case4i", c4i.a1, c4i.a3);
    c4i.map = registry_map("s", "-4/19683*s^3 - 2/9*s + 1");
    c4i.S = ints({2, 3});
    c4i.table = table3i;
    c4i.alg1_witness = 5;
    c4i.real_witnesses = real23;
    c4i.imaginary_witnesses = imag23;
    c4i.ramification = {"1+2", "1+1+1", "(1+2)+(1+2)"};
    R.push_back(std::move(c4i));

    RegistryEntry c4ii;
    c4ii.id = "case4ii";
    c4ii.title = "Case (4), second subcase";
    c4ii.a1 = "-96*s^3 + 972*s - 729";
    c4ii.a3 = "(-32*s^3 - 162*s + 243)^3";
    c4ii.surface = registry_surface("case4ii", c4ii.a1, c4ii.a3);
    c4ii.map = registry_map("s - 1", "-16/729*s^3 - 1/9*s + 1/6");
    c4ii.S = ints({2, 3, 7});
    c4ii.table = table3ii;
    c4ii.alg1_witness = 5;
    c4ii.real_witnesses = real237;
    c4ii.imaginary_witnesses = imag237;
    c4ii.ramification = {"1+2", "1+1+1", "(1+2)+(1+2)"};
    R.push_back(std::move(c4ii));

    for (auto& e : R)
        if (!e.S.empty()) e.surface.declared_bad_primes = e.S;
    return R;
}

}  // namespace detail

inline const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = detail::build_registry();
    return entries;
}

inline std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    return ids;
}

inline const RegistryEntry& registry_lookup(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    fail(ErrorKind::UnknownSurface, "no registry surface named '" + id + "'");
}

/// The base surface X0 in the parameter t.
inline const WeierstrassSurface& base_surface() { return registry_lookup("x0").surface; }

/// Base targets in the column order of the ramification table.
inline std::array<BaseTarget, 3> ramification_targets() {
    return {BaseTarget::finite(parse_polynomial("t", "t")), BaseTarget::infinity(),
            BaseTarget::finite(parse_polynomial("t^2 + 9*t + 27", "t"))};
}

}  // namespace ellsurf

#endif
