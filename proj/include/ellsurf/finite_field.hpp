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

#ifndef ELLSURF_FINITE_FIELD_HPP
#define ELLSURF_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "modular.hpp"
#include "number_theory.hpp"
#include "polynomial.hpp"

namespace ellsurf {

/// F_q with q = p^k, k <= 3, built on the lexicographically least monic
/// irreducible modulus. Nonzero elements are stored as discrete logs with
/// respect to a fixed generator; addition goes through a Zech table.
/// The value zero() is the extra code q - 1.
class FqContext {
   public:
    using Elem = std::uint32_t;

    FqContext(std::uint64_t p, unsigned k) : p_(p), k_(k) {
        if (k < 1 || k > 3) fail(ErrorKind::Domain, "extension degree must be 1, 2 or 3");
        if (!is_prime_u64_small(p)) fail(ErrorKind::Domain, "characteristic must be prime");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) q *= p;
        if (q > (1u << 24)) fail(ErrorKind::Domain, "field too large for table arithmetic");
        q_ = static_cast<std::uint32_t>(q);
        order_ = q_ - 1;
        zero_ = order_;
        pick_modulus();
        build_tables();
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint32_t size() const noexcept { return q_; }
    /// Modulus coefficients, ascending, monic of degree k.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return 0; }
    bool is_zero(Elem a) const noexcept { return a == zero_; }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a == zero_ || b == zero_) return zero_;
        std::uint32_t s = a + b;
        return s >= order_ ? s - order_ : s;
    }
    Elem add(Elem a, Elem b) const noexcept {
        if (a == zero_) return b;
        if (b == zero_) return a;
        std::uint32_t d = b >= a ? b - a : b + order_ - a;
        Elem z = zech_[d];
        if (z == zero_) return zero_;
        std::uint32_t s = a + z;
        return s >= order_ ? s - order_ : s;
    }
    Elem neg(Elem a) const noexcept { return mul(a, minus_one_); }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem inv(Elem a) const {
        if (a == zero_) fail(ErrorKind::Domain, "inverse of zero in F_q");
        return a == 0 ? 0 : order_ - a;
    }
    Elem square(Elem a) const noexcept { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t e) const noexcept {
        if (a == zero_) return e == 0 ? 0 : zero_;
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * e) % order_);
    }
    Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

    /// Image of an integer.
    Elem from_integer(const Integer& v) const { return prime_[mod_u64(v, p_)]; }
    Elem from_u64(std::uint64_t v) const { return prime_[v % p_]; }

    /// Quadratic character, odd q only: 0 at zero.
    int chi(Elem a) const noexcept {
        if (a == zero_) return 0;
        return (a & 1u) ? -1 : 1;
    }
    /// Absolute trace to F_p, as 0..p-1.
    std::uint32_t trace(Elem a) const noexcept { return a == zero_ ? 0 : trace_[a]; }

    /// Elements in a fixed enumeration order (index 0 is zero).
    Elem element(std::uint32_t index) const noexcept { return index == 0 ? zero_ : index - 1; }
    /// Base-p digit vector of the polynomial-basis representation.
    std::vector<std::uint64_t> coordinates(Elem a) const {
        std::uint32_t v = a == zero_ ? 0 : exp_[a];
        std::vector<std::uint64_t> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = v % p_;
            v /= static_cast<std::uint32_t>(p_);
        }
        return d;
    }
    Elem from_coordinates(const std::vector<std::uint64_t>& d) const {
        std::uint32_t v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(d[i] % p_);
        return v == 0 ? zero_ : log_[v];
    }

    /// Evaluates an integer polynomial (reduced mod p) at x.
    Elem evaluate(const IntPoly& f, Elem x) const {
        Elem r = zero_;
        for (int i = f.degree(); i >= 0; --i) r = add(mul(r, x), from_integer(f.coefficients()[i]));
        return r;
    }
    Elem evaluate(const std::vector<Elem>& f, Elem x) const noexcept {
        Elem r = zero_;
        for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, x), f[i]);
        return r;
    }
    std::vector<Elem> reduce(const IntPoly& f) const {
        std::vector<Elem> r;
        for (const auto& c : f.coefficients()) r.push_back(from_integer(c));
        while (!r.empty() && r.back() == zero_) r.pop_back();
        return r;
    }

   private:
    // polynomial-basis arithmetic on packed base-p integers, used only while building tables
    std::vector<std::uint64_t> unpack(std::uint32_t v) const {
        std::vector<std::uint64_t> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = v % p_;
            v /= static_cast<std::uint32_t>(p_);
        }
        return d;
    }
    std::uint32_t pack(const std::vector<std::uint64_t>& d) const {
        std::uint32_t v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(d[i]);
        return v;
    }
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        auto x = unpack(a), y = unpack(b);
        std::vector<std::uint64_t> c(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j) c[i + j] = (c[i + j] + x[i] * y[j]) % p_;
        for (unsigned d = 2 * k_ - 1; d >= k_; --d) {
            std::uint64_t f = c[d];
            if (!f) continue;
            for (unsigned i = 0; i <= k_; ++i) c[d - k_ + i] = (c[d - k_ + i] + (p_ - f) * modulus_[i]) % p_;
        }
        c.resize(k_);
        return pack(c);
    }
    std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void pick_modulus() {
        PrimeField F(p_);
        if (k_ == 1) {
            modulus_ = {0, 1};
            return;
        }
        // lexicographic on (c_0, ..., c_{k-1}); irreducible iff no roots for k <= 3
        std::vector<std::uint64_t> c(k_, 0);
        for (;;) {
            bool has_root = false;
            for (std::uint64_t x = 0; x < p_ && !has_root; ++x) {
                std::uint64_t v = 1;
                for (unsigned i = k_; i-- > 0;) v = F.add(F.mul(v, x), c[i]);
                has_root = (v == 0);
            }
            if (!has_root) {
                modulus_ = c;
                modulus_.push_back(1);
                return;
            }
            unsigned i = k_;
            while (i-- > 0) {
                if (++c[i] < p_) break;
                c[i] = 0;
            }
        }
    }

    void build_tables() {
        std::vector<std::uint64_t> fac;
        {
            std::uint64_t m = order_;
            for (std::uint64_t r = 2; r * r <= m; ++r)
                if (m % r == 0) {
                    fac.push_back(r);
                    while (m % r == 0) m /= r;
                }
            if (m > 1) fac.push_back(m);
        }
        std::uint32_t g = 0;
        for (std::uint32_t cand = 1; cand < q_; ++cand) {
            bool ok = true;
            for (auto r : fac)
                if (slow_pow(cand, order_ / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                g = cand;
                break;
            }
        }
        if (q_ == 2) g = 1;
        exp_.assign(order_, 0);
        log_.assign(q_, zero_);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order_; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = slow_mul(x, g);
        }
        zech_.assign(order_, zero_);
        for (std::uint32_t i = 0; i < order_; ++i) {
            auto d = unpack(exp_[i]);
            d[0] = (d[0] + 1) % p_;
            std::uint32_t v = pack(d);
            zech_[i] = v == 0 ? zero_ : log_[v];
        }
        minus_one_ = (p_ == 2) ? 0 : order_ / 2;
        prime_.assign(p_, zero_);
        for (std::uint64_t v = 1; v < p_; ++v) prime_[v] = log_[static_cast<std::uint32_t>(v)];
        // trace of alpha = alpha + alpha^p + ... ; constant-coordinate of the sum
        trace_.assign(order_, 0);
        for (std::uint32_t i = 0; i < order_; ++i) {
            Elem s = zero_;
            Elem a = i;
            for (unsigned j = 0; j < k_; ++j) {
                s = add(s, a);
                a = frobenius(a);
            }
            trace_[i] = s == zero_ ? 0 : static_cast<std::uint32_t>(unpack(exp_[s])[0]);
        }
    }

    std::uint64_t p_;
    unsigned k_;
    std::uint32_t q_ = 0, order_ = 0, zero_ = 0;
    Elem minus_one_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint32_t> exp_, log_, zech_, trace_;
    std::vector<Elem> prime_;
};

/// Roots of f in F_q with multiplicities, by exhaustive evaluation and deflation.
inline std::vector<std::pair<FqContext::Elem, unsigned>> fq_roots(const FqContext& K,
                                                                   std::vector<FqContext::Elem> f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
    if (f.empty()) fail(ErrorKind::Domain, "roots of the zero polynomial");
    std::vector<std::pair<FqContext::Elem, unsigned>> out;
    for (std::uint32_t i = 0; i < K.size() && f.size() > 1; ++i) {
        const auto x = K.element(i);
        unsigned m = 0;
        for (;;) {
            if (f.size() <= 1 || !K.is_zero(K.evaluate(f, x))) break;
            // synthetic division by (s - x)
            std::vector<FqContext::Elem> q(f.size() - 1, K.zero());
            auto acc = K.zero();
            for (std::size_t j = f.size(); j-- > 1;) {
                acc = K.add(K.mul(acc, x), f[j]);
                q[j - 1] = acc;
            }
            f = std::move(q);
            ++m;
        }
        if (m) out.emplace_back(x, m);
    }
    return out;
}

inline std::vector<std::pair<FqContext::Elem, unsigned>> fq_roots(const FqContext& K, const IntPoly& f) {
    return fq_roots(K, K.reduce(f));
}

/// Order of vanishing of f at x (f nonzero over F_q).
inline unsigned fq_order(const FqContext& K, std::vector<FqContext::Elem> f, FqContext::Elem x) {
    unsigned m = 0;
    while (f.size() > 1 && K.is_zero(K.evaluate(f, x))) {
        std::vector<FqContext::Elem> q(f.size() - 1, K.zero());
        auto acc = K.zero();
        for (std::size_t j = f.size(); j-- > 1;) {
            acc = K.add(K.mul(acc, x), f[j]);
            q[j - 1] = acc;
        }
        f = std::move(q);
        ++m;
    }
    return m;
}

}  // namespace ellsurf

#endif
