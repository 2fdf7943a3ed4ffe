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

#ifndef ELLSURF_SURFACE_HPP
#define ELLSURF_SURFACE_HPP

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "number_theory.hpp"
#include "polynomial.hpp"
#include "polynomial_algorithms.hpp"

namespace ellsurf {

/// Weights of a1, a2, a3, a4, a6.
inline constexpr std::array<unsigned, 5> kWeierstrassWeights{1, 2, 3, 4, 6};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z[s].
struct WeierstrassSurface {
    std::string name;
    std::array<IntPoly, 5> a;  // a1, a2, a3, a4, a6
    IntPoly b2, b4, b6, b8, c4, c6, disc;
    unsigned weight = 0;
    Rational lambda = 1;  // rescaling applied when normalizing
    std::optional<std::vector<Integer>> declared_bad_primes;

    const IntPoly& a1() const { return a[0]; }
    const IntPoly& a2() const { return a[1]; }
    const IntPoly& a3() const { return a[2]; }
    const IntPoly& a4() const { return a[3]; }
    const IntPoly& a6() const { return a[4]; }
};

namespace detail {

template <class P>
struct Invariants5 {
    P b2, b4, b6, b8, c4, c6, disc;
};

template <class P>
Invariants5<P> weierstrass_invariants(const std::array<P, 5>& a) {
    const P &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    Invariants5<P> r;
    r.b2 = a1 * a1 + P(4) * a2;
    r.b4 = P(2) * a4 + a1 * a3;
    r.b6 = a3 * a3 + P(4) * a6;
    r.b8 = a1 * a1 * a6 + P(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    r.c4 = r.b2 * r.b2 - P(24) * r.b4;
    r.c6 = -(r.b2 * r.b2 * r.b2) + P(36) * r.b2 * r.b4 - P(216) * r.b6;
    r.disc = -(r.b2 * r.b2 * r.b8) - P(8) * r.b4 * r.b4 * r.b4 - P(27) * r.b6 * r.b6 + P(9) * r.b2 * r.b4 * r.b6;
    return r;
}

inline unsigned ceil_div(int num, unsigned den) {
    if (num <= 0) return 0;
    return (static_cast<unsigned>(num) + den - 1) / den;
}

}  // namespace detail

/// Builds a surface from integral coefficients, computing invariants and the weight.
inline WeierstrassSurface make_surface(std::string name, const std::array<IntPoly, 5>& a) {
    WeierstrassSurface S;
    S.name = std::move(name);
    S.a = a;
    auto inv = detail::weierstrass_invariants(a);
    S.b2 = inv.b2;
    S.b4 = inv.b4;
    S.b6 = inv.b6;
    S.b8 = inv.b8;
    S.c4 = inv.c4;
    S.c6 = inv.c6;
    S.disc = inv.disc;
    if (S.disc.is_zero()) fail(ErrorKind::Nondegenerate, "discriminant vanishes identically for " + S.name);
    if (S.c4 * S.c4 * S.c4 - S.c6 * S.c6 != IntPoly(1728) * S.disc)
        fail(ErrorKind::Domain, "c4^3 - c6^2 != 1728 disc");
    unsigned w = 0;
    for (std::size_t i = 0; i < 5; ++i) w = std::max(w, detail::ceil_div(a[i].degree(), kWeierstrassWeights[i]));
    S.weight = std::max(w, 1u);
    return S;
}

/// Admissible rescaling a_i -> lambda^i a_i with the least lambda making the
/// model integral and primitive.
inline WeierstrassSurface normalize_integral_model(std::string name, const std::array<RatPoly, 5>& raw) {
    if (detail::weierstrass_invariants(raw).disc.is_zero())
        fail(ErrorKind::Nondegenerate, "discriminant vanishes identically for " + name);
    // primes that can move: denominators, and common numerator content
    std::map<Integer, bool> primes;
    Integer common = 0;
    for (const auto& f : raw) {
        if (f.is_zero()) continue;
        Integer num_content = 0;
        for (const auto& c : f.coefficients()) {
            if (c.get_den() != 1)
                for (const auto& q : factor_integer(c.get_den()).primes()) primes[q] = true;
            num_content = igcd(num_content, c.get_num());
        }
        common = igcd(common, num_content);
    }
    if (common > 1)
        for (const auto& q : factor_integer(common).primes()) primes[q] = true;

    Rational lambda = 1;
    for (const auto& [p, unused] : primes) {
        (void)unused;
        std::optional<long> ep;
        for (std::size_t i = 0; i < 5; ++i) {
            if (raw[i].is_zero()) continue;
            long v = std::numeric_limits<long>::max();
            for (const auto& c : raw[i].coefficients()) {
                if (c == 0) continue;
                long vc = static_cast<long>(valuation(c.get_num(), p)) - static_cast<long>(valuation(c.get_den(), p));
                v = std::min(v, vc);
            }
            const long w = kWeierstrassWeights[i];
            // ceil(-v / w)
            long e = -v >= 0 ? (-v + w - 1) / w : -((v) / w);
            ep = ep ? std::max(*ep, e) : e;
        }
        if (!ep || *ep == 0) continue;
        if (*ep > 0)
            lambda *= Rational(ipow(p, static_cast<unsigned long>(*ep)));
        else
            lambda /= Rational(ipow(p, static_cast<unsigned long>(-*ep)));
    }
    std::array<IntPoly, 5> a;
    for (std::size_t i = 0; i < 5; ++i) {
        RatPoly scaled = raw[i] * rpow(lambda, kWeierstrassWeights[i]);
        if (!is_integral(scaled)) fail(ErrorKind::Domain, "normalization left a non-integral coefficient");
        a[i] = to_integer(scaled);
    }
    WeierstrassSurface S = make_surface(std::move(name), a);
    S.lambda = lambda;
    return S;
}

/// Coefficient of s^(i*a) in a_i: the model at s = infinity evaluated at u = 0.
inline Integer coefficient_at_infinity(const IntPoly& f, unsigned weight_times_index) {
    return f[weight_times_index];
}

/// The chart u = 1/s: a_i(u) = u^(i a) a_i(1/u).
inline WeierstrassSurface infinity_chart(const WeierstrassSurface& S) {
    std::array<IntPoly, 5> a;
    for (std::size_t i = 0; i < 5; ++i) a[i] = S.a[i].reversed(kWeierstrassWeights[i] * S.weight);
    WeierstrassSurface T = make_surface(S.name + "@inf", a);
    T.weight = S.weight;
    return T;
}

/// A closed point of P^1 over Q.
struct PlaceOfP1 {
    bool infinite = false;
    RatPoly pi;  // monic irreducible, unset at infinity

    static PlaceOfP1 infinity() { return PlaceOfP1{true, RatPoly()}; }
    static PlaceOfP1 finite(RatPoly p) { return PlaceOfP1{false, std::move(p)}; }
    unsigned residue_degree() const { return infinite ? 1u : static_cast<unsigned>(pi.degree()); }
    std::string to_string(const std::string& var = "s") const { return infinite ? "inf" : ellsurf::to_string(pi, var); }
};

enum class FiberKind { Good, Multiplicative, Additive };

inline const char* to_string(FiberKind k) {
    switch (k) {
        case FiberKind::Good: return "good";
        case FiberKind::Multiplicative: return "multiplicative";
        case FiberKind::Additive: return "additive";
    }
    return "?";
}

/// Fibre data at one closed point; counts are per geometric point.
struct FiberDatum {
    PlaceOfP1 place;
    FiberKind kind = FiberKind::Good;
    unsigned n = 0;    // ord of disc
    unsigned m = 1;    // components
    unsigned delta = 0;
    unsigned euler = 0;

    std::string kodaira() const {
        if (kind == FiberKind::Multiplicative) return "I" + std::to_string(n);
        if (kind == FiberKind::Additive) return "additive";
        return "I0";
    }
};

inline unsigned order_at_infinity(const WeierstrassSurface& S) {
    return 12 * S.weight - static_cast<unsigned>(S.disc.degree());
}

/// Characteristic-zero fibre classification, bad fibres only, infinity last.
inline std::vector<FiberDatum> classify_fibers(const WeierstrassSurface& S) {
    std::vector<FiberDatum> out;
    const RatPoly c4 = to_rational(S.c4);
    for (const auto& [pi, n] : factor_rational(to_rational(S.disc))) {
        FiberDatum F;
        F.place = PlaceOfP1::finite(pi);
        F.n = n;
        F.euler = n;
        if (!(c4 % pi).is_zero()) {
            F.kind = FiberKind::Multiplicative;
            F.m = n;
            F.delta = 1;
        } else {
            F.kind = FiberKind::Additive;
            F.m = n - 1;
            F.delta = 2;
        }
        out.push_back(std::move(F));
    }
    std::stable_sort(out.begin(), out.end(), [](const FiberDatum& x, const FiberDatum& y) {
        if (x.place.pi.degree() != y.place.pi.degree()) return x.place.pi.degree() < y.place.pi.degree();
        return poly_less(x.place.pi, y.place.pi);
    });
    const unsigned ninf = order_at_infinity(S);
    if (ninf > 0) {
        FiberDatum F;
        F.place = PlaceOfP1::infinity();
        F.n = ninf;
        F.euler = ninf;
        if (S.c4[4 * S.weight] != 0) {
            F.kind = FiberKind::Multiplicative;
            F.m = ninf;
            F.delta = 1;
        } else {
            F.kind = FiberKind::Additive;
            F.m = ninf - 1;
            F.delta = 2;
        }
        out.push_back(std::move(F));
    }
    return out;
}

inline bool multiplicative_only(const std::vector<FiberDatum>& fibers) {
    return std::all_of(fibers.begin(), fibers.end(), [](const FiberDatum& f) { return f.kind != FiberKind::Additive; });
}

struct SurfaceInvariants {
    unsigned a = 0;
    unsigned euler = 0;  // 12a
    unsigned chi = 0;
    int pg = 0;
    int ntriv_rank = 0;
    unsigned bad_fibers = 0;  // geometric
    unsigned fiber_euler_sum = 0;
};

inline SurfaceInvariants invariants(const WeierstrassSurface& S, const std::vector<FiberDatum>& fibers) {
    SurfaceInvariants I;
    I.a = S.weight;
    I.euler = 12 * S.weight;
    I.chi = S.weight;
    I.pg = static_cast<int>(S.weight) - 1;
    int delta_sum = 0;
    for (const auto& f : fibers) {
        const unsigned d = f.place.residue_degree();
        I.fiber_euler_sum += d * f.euler;
        delta_sum += static_cast<int>(d * f.delta);
        I.bad_fibers += d;
    }
    if (I.fiber_euler_sum != I.euler)
        fail(ErrorKind::EulerMismatch, S.name + ": sum of fibre Euler numbers " + std::to_string(I.fiber_euler_sum) +
                                           " != 12a = " + std::to_string(I.euler) + " (model not minimal?)");
    I.ntriv_rank = delta_sum - 4;
    return I;
}

inline SurfaceInvariants invariants(const WeierstrassSurface& S) { return invariants(S, classify_fibers(S)); }

/// rho = r + 2 + sum (m_t - 1) over geometric bad fibres.
inline long shioda_tate_rho(const std::vector<FiberDatum>& fibers, long mw_rank) {
    if (mw_rank < 0) fail(ErrorKind::Domain, "Mordell-Weil rank must be non-negative");
    long r = mw_rank + 2;
    for (const auto& f : fibers) r += static_cast<long>(f.place.residue_degree()) * (static_cast<long>(f.m) - 1);
    return r;
}

inline long shioda_tate_rho(const WeierstrassSurface& S, long mw_rank) {
    return shioda_tate_rho(classify_fibers(S), mw_rank);
}

}  // namespace ellsurf

#endif
