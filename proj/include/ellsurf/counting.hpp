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

#ifndef ELLSURF_COUNTING_HPP
#define ELLSURF_COUNTING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"
#include "surface.hpp"

namespace ellsurf {

using Elem = FqContext::Elem;

/// Projective points of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q.
inline std::uint64_t count_cubic(const FqContext& K, const std::array<Elem, 5>& a) {
    const Elem a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    std::uint64_t n = 1;  // point at infinity
    const std::uint32_t q = K.size();
    if (K.characteristic() == 2) {
        for (std::uint32_t i = 0; i < q; ++i) {
            const Elem x = K.element(i);
            const Elem b = K.add(K.mul(a1, x), a3);
            const Elem c = K.add(K.mul(K.add(K.mul(K.add(x, a2), x), a4), x), a6);
            if (K.is_zero(b))
                n += 1;  // y^2 = c has one root
            else if (K.trace(K.mul(c, K.inv(K.square(b)))) == 0)
                n += 2;
        }
        return n;
    }
    const Elem four = K.from_u64(4);
    for (std::uint32_t i = 0; i < q; ++i) {
        const Elem x = K.element(i);
        const Elem b = K.add(K.mul(a1, x), a3);
        const Elem c = K.add(K.mul(K.add(K.mul(K.add(x, a2), x), a4), x), a6);
        n += static_cast<std::uint64_t>(1 + K.chi(K.add(K.square(b), K.mul(four, c))));
    }
    return n;
}

enum class ReductionKind { Good, Split, Nonsplit, Additive };

inline const char* to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::Good: return "good";
        case ReductionKind::Split: return "split";
        case ReductionKind::Nonsplit: return "nonsplit";
        case ReductionKind::Additive: return "additive";
    }
    return "?";
}

/// One fibre over a point of P^1(F_q).
struct FiberCountRecord {
    std::optional<Elem> t;  // empty at infinity
    ReductionKind kind = ReductionKind::Good;
    unsigned n = 0;
    long a_t = 0;
    std::uint64_t weierstrass_points = 0;
    std::uint64_t smooth_points = 0;
    long component_trace = 0;
};

/// The surface reduced into F_q, ready for fibre evaluation.
class ReducedSurface {
   public:
    ReducedSurface(const WeierstrassSurface& S, const FqContext& K) : K_(K) {
        for (std::size_t i = 0; i < 5; ++i) {
            a_[i] = K.reduce(S.a[i]);
            inf_[i] = K.from_integer(S.a[i][kWeierstrassWeights[i] * S.weight]);
        }
        disc_ = K.reduce(S.disc);
        if (disc_.empty()) fail(ErrorKind::Domain, S.name + ": disc vanishes identically mod p");
        const int deg = static_cast<int>(disc_.size()) - 1;
        inf_order_ = static_cast<unsigned>(static_cast<int>(12 * S.weight) - deg);
    }

    const FqContext& field() const { return K_; }

    FiberCountRecord classify(std::optional<Elem> t) const {
        FiberCountRecord r;
        r.t = t;
        std::array<Elem, 5> c;
        if (t) {
            for (std::size_t i = 0; i < 5; ++i) c[i] = K_.evaluate(a_[i], *t);
            r.n = K_.is_zero(K_.evaluate(disc_, *t)) ? fq_order(K_, disc_, *t) : 0;
        } else {
            c = inf_;
            r.n = inf_order_;
        }
        const std::uint64_t q = K_.size();
        r.weierstrass_points = count_cubic(K_, c);
        r.a_t = static_cast<long>(q + 1) - static_cast<long>(r.weierstrass_points);
        if (r.n == 0) {
            r.kind = ReductionKind::Good;
            r.smooth_points = r.weierstrass_points;
            return r;
        }
        if (r.a_t == 1) {
            r.kind = ReductionKind::Split;
            r.smooth_points = r.n * q;
            r.component_trace = static_cast<long>(r.n) - 1;
        } else if (r.a_t == -1) {
            r.kind = ReductionKind::Nonsplit;
            r.smooth_points = (r.n % 2) ? q + 2 : 2 * q + 2;
            r.component_trace = (r.n % 2) ? 0 : 1;
        } else {
            r.kind = ReductionKind::Additive;
        }
        return r;
    }

   private:
    const FqContext& K_;
    std::array<std::vector<Elem>, 5> a_;
    std::array<Elem, 5> inf_{};
    std::vector<Elem> disc_;
    unsigned inf_order_ = 0;
};

inline FiberCountRecord classify_fiber_mod_q(const WeierstrassSurface& S, const FqContext& K, std::optional<Elem> t) {
    return ReducedSurface(S, K).classify(t);
}

struct SurfaceCount {
    std::uint64_t q = 0;
    std::uint64_t N = 0;  // points of the smooth model
    long C = 0;           // trace of Frobenius on the non-identity fibre components
    std::vector<FiberCountRecord> bad;  // bad fibres over P^1(F_q)
};

/// Sums smooth-model fibre counts over P^1(F_q). Points in one Frobenius
/// orbit have equal counts, so each orbit is counted once.
inline SurfaceCount surface_count(const WeierstrassSurface& S, const FqContext& K) {
    ReducedSurface R(S, K);
    SurfaceCount out;
    out.q = K.size();
    auto absorb = [&](const FiberCountRecord& r, std::uint64_t mult) {
        if (r.kind == ReductionKind::Additive) {
            fail(ErrorKind::AdditiveFiberAtGoodPrime,
                 S.name + ": additive fibre mod p = " + std::to_string(K.characteristic()));
        }
        out.N += mult * r.smooth_points;
        out.C += static_cast<long>(mult) * r.component_trace;
        if (r.kind != ReductionKind::Good)
            for (std::uint64_t i = 0; i < mult; ++i) out.bad.push_back(r);
    };
    for (std::uint32_t i = 0; i < K.size(); ++i) {
        const Elem t = K.element(i);
        // orbit representative: smallest code among t, t^p, t^(p^2)
        Elem u = t;
        std::uint64_t orbit = 1;
        bool rep = true;
        for (unsigned j = 1; j < K.degree(); ++j) {
            u = K.frobenius(u);
            if (u == t) break;
            if (u < t) rep = false;
            ++orbit;
        }
        if (!rep) continue;
        absorb(R.classify(t), orbit);
    }
    absorb(R.classify(std::nullopt), 1);
    return out;
}

/// (N - 1 - q^2)/q - 2 - C: the trace on the non-trivial part, Tate-twisted.
inline Rational ntriv_trace(std::uint64_t N, long C, std::uint64_t q) {
    const Integer qq = from_u64(q);
    Rational t = Rational(from_u64(N) - 1 - qq * qq, qq) - 2 - C;
    t.canonicalize();
    if (!is_integral(Rational(t * qq))) fail(ErrorKind::NonIntegralTrace, "q * trace is not an integer");
    return t;
}

inline Rational ntriv_trace(const SurfaceCount& c) { return ntriv_trace(c.N, c.C, c.q); }

}  // namespace ellsurf

#endif
