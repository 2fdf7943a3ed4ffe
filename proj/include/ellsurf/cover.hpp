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

#ifndef ELLSURF_COVER_HPP
#define ELLSURF_COVER_HPP

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "polynomial_algorithms.hpp"
#include "surface.hpp"

namespace ellsurf {

/// s -> t = P(s)/Q(s) with P, Q coprime integral polynomials.
struct RationalMap {
    IntPoly P, Q;

    unsigned degree() const { return static_cast<unsigned>(std::max(P.degree(), Q.degree())); }
    std::string to_string() const {
        return "(" + ellsurf::to_string(P) + ")/(" + ellsurf::to_string(Q) + ")";
    }
};

/// Clears denominators and common factors; keeps the sign of the inputs.
inline RationalMap make_rational_map(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) fail(ErrorKind::Domain, "rational map with zero denominator");
    if (num.is_zero()) fail(ErrorKind::Domain, "constant rational map");
    RatPoly g = gcd(num, den);
    RatPoly n = num / g, d = den / g;
    Integer L = 1;
    for (const auto& c : n.coefficients()) L = ilcm(L, c.get_den());
    for (const auto& c : d.coefficients()) L = ilcm(L, c.get_den());
    IntPoly P = to_integer(n * Rational(L)), Q = to_integer(d * Rational(L));
    Integer c = igcd(content(P), content(Q));
    if (c < 0) c = -c;
    if (c > 1) {
        P = exact_quotient(P, IntPoly(c));
        Q = exact_quotient(Q, IntPoly(c));
    }
    RationalMap m{P, Q};
    if (m.degree() < 1) fail(ErrorKind::Domain, "rational map must have degree >= 1");
    return m;
}

inline RationalMap identity_map() { return RationalMap{IntPoly::x(), IntPoly(1)}; }

/// Q^(m) * f(P/Q) for a polynomial f of degree <= m.
inline RatPoly homogenize_along(const RatPoly& f, const RationalMap& psi, unsigned m) {
    const RatPoly P = to_rational(psi.P), Q = to_rational(psi.Q);
    RatPoly r;
    for (int j = 0; j <= f.degree(); ++j) {
        if (f[j] == 0) continue;
        r += f[j] * P.pow(static_cast<unsigned>(j)) * Q.pow(m - static_cast<unsigned>(j));
    }
    return r;
}

/// A closed point of the base line: infinity or a monic irreducible in t.
using BaseTarget = PlaceOfP1;

/// Ramification indices of the points above a target, listed for one
/// conjugate target (they agree across conjugates).
struct RamificationProfile {
    unsigned conjugates = 1;
    std::vector<unsigned> parts;  // ascending

    unsigned excess() const {
        unsigned e = 0;
        for (auto v : parts) e += v - 1;
        return e * conjugates;
    }
    std::string to_string() const {
        std::ostringstream one;
        for (std::size_t i = 0; i < parts.size(); ++i) one << (i ? "+" : "") << parts[i];
        if (conjugates == 1) return one.str();
        std::ostringstream os;
        for (unsigned c = 0; c < conjugates; ++c) os << (c ? "+" : "") << "(" << one.str() << ")";
        return os.str();
    }
};

/// Preimage places of a target with their ramification indices; the
/// returned places live on the source line.
inline std::vector<std::pair<PlaceOfP1, unsigned>> preimages(const RationalMap& psi, const BaseTarget& target) {
    const unsigned d = psi.degree();
    RatPoly R;
    unsigned m = 1;
    if (target.infinite) {
        R = to_rational(psi.Q);
    } else {
        m = static_cast<unsigned>(target.pi.degree());
        R = homogenize_along(target.pi, psi, m);
    }
    std::vector<std::pair<PlaceOfP1, unsigned>> out;
    for (auto& [pi, e] : factor_rational(R)) out.emplace_back(PlaceOfP1::finite(pi), e);
    const int pad = static_cast<int>(d * m) - R.degree();
    if (pad > 0) out.emplace_back(PlaceOfP1::infinity(), static_cast<unsigned>(pad));
    return out;
}

inline RamificationProfile ramification_profile(const RationalMap& psi, const BaseTarget& target) {
    RamificationProfile prof;
    prof.conjugates = target.residue_degree();
    for (const auto& [place, e] : preimages(psi, target)) {
        const unsigned share = place.residue_degree() / prof.conjugates;
        if (share * prof.conjugates != place.residue_degree())
            fail(ErrorKind::Domain, "preimage degree not divisible by target degree");
        for (unsigned i = 0; i < share; ++i) prof.parts.push_back(e);
    }
    std::sort(prof.parts.begin(), prof.parts.end());
    return prof;
}

/// d * sum d_n - sum over preimages of bad points of (eps - 1) - 4.
inline int cover_dimension(unsigned d, unsigned bad_points, const std::vector<RamificationProfile>& profiles) {
    int excess = 0;
    for (const auto& p : profiles) excess += static_cast<int>(p.excess());
    return static_cast<int>(d * bad_points) - excess - 4;
}

/// Checks ord_s(disc of cover) = eps_s * ord_t(disc of base) above every bad place,
/// and that the cover has no other bad fibres.
inline bool pullback_orders_consistent(const WeierstrassSurface& base, const RationalMap& psi,
                                       const WeierstrassSurface& cover) {
    const auto cover_fibers = classify_fibers(cover);
    auto order_on_cover = [&](const PlaceOfP1& pl) -> unsigned {
        for (const auto& f : cover_fibers) {
            if (f.place.infinite != pl.infinite) continue;
            if (pl.infinite || f.place.pi == pl.pi) return f.n;
        }
        return 0;
    };
    unsigned matched = 0;
    for (const auto& bf : classify_fibers(base)) {
        for (const auto& [pl, e] : preimages(psi, bf.place)) {
            if (order_on_cover(pl) != e * bf.n) return false;
            ++matched;
        }
    }
    return matched == cover_fibers.size();
}

/// Pulls the base surface back along t = psi(s): a_i -> Q^(i a) a_i(P/Q), then normalizes.
inline WeierstrassSurface pullback(const WeierstrassSurface& base, const RationalMap& psi, std::string name = {}) {
    const auto base_fibers = classify_fibers(base);
    for (const auto& f : base_fibers)
        if (f.kind == FiberKind::Additive)
            fail(ErrorKind::AdditiveBaseFiber, base.name + " has an additive fibre at " + f.place.to_string("t"));
    std::array<RatPoly, 5> raw;
    for (std::size_t i = 0; i < 5; ++i)
        raw[i] = homogenize_along(to_rational(base.a[i]), psi, kWeierstrassWeights[i] * base.weight);
    if (name.empty()) name = base.name + " pulled back along " + psi.to_string();
    WeierstrassSurface cover = normalize_integral_model(std::move(name), raw);
    if (!pullback_orders_consistent(base, psi, cover))
        fail(ErrorKind::Domain, "pullback fibre orders do not multiply by ramification indices");
    return cover;
}

}  // namespace ellsurf

#endif
