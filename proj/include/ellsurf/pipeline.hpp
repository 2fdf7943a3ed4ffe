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

#ifndef ELLSURF_PIPELINE_HPP
#define ELLSURF_PIPELINE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "charpoly.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "irreducibility.hpp"
#include "number_theory.hpp"
#include "surface.hpp"

namespace ellsurf {

enum class OutputFormat { Json, Markdown };

struct RunConfig {
    std::uint64_t prime_bound = 1000;
    std::uint64_t field_bound = 1000;
    std::uint64_t determinant_bound = 97;  // largest prime used to pin the determinant character
    std::uint64_t cubic_bound = 31;        // largest p counted over F_{p^3}
    std::uint64_t count_bound = 128;       // largest p counted at all; cost grows like p^4
    unsigned threads = 1;
    bool oracle = false;
    OutputFormat format = OutputFormat::Markdown;

    void validate() const {
        if (prime_bound < 2 || field_bound < 2) fail(ErrorKind::Input, "bounds must be at least 2");
        if (threads < 1) fail(ErrorKind::Input, "thread count must be at least 1");
        if (count_bound < 2) fail(ErrorKind::Input, "count bound must be at least 2");
    }
};

/// Worker count from ELLSURF_THREADS, else the hardware concurrency.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("ELLSURF_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Runs f(i) for i in [0, n) on up to `threads` workers; results keep index order
/// and the first exception (by index) is rethrown.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned threads, F&& f) {
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned k = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
    if (k <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < k; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

/// Frobenius data of one surface outside a set S of bad primes. Counts are
/// memoized; safe to call from several threads.
class FrobeniusEngine {
   public:
    FrobeniusEngine(WeierstrassSurface surface, std::vector<Integer> S, RunConfig cfg = {})
        : surface_(std::move(surface)), S_(std::move(S)), cfg_(cfg) {
        std::sort(S_.begin(), S_.end());
    }

    const WeierstrassSurface& surface() const { return surface_; }
    const std::vector<Integer>& bad_primes() const { return S_; }
    bool is_bad(std::uint64_t p) const { return std::find(S_.begin(), S_.end(), from_u64(p)) != S_.end(); }

    SurfaceCount count(std::uint64_t p, unsigned k) {
        if (is_bad(p)) fail(ErrorKind::Domain, "p = " + std::to_string(p) + " is in S");
        {
            std::lock_guard<std::mutex> g(mu_);
            if (auto it = counts_.find({p, k}); it != counts_.end()) return it->second;
        }
        FqContext K(p, k);
        SurfaceCount c = surface_count(surface_, K);
        std::lock_guard<std::mutex> g(mu_);
        return counts_.emplace(std::make_pair(p, k), std::move(c)).first->second;
    }

    Rational raw_trace(std::uint64_t p, unsigned k) { return ntriv_trace(count(p, k)); }

    /// Sign of the determinant at p from the counts alone; empty when ambiguous.
    /// Purity usually rules one sign out; otherwise F_{p^3} decides for small p.
    std::optional<int> local_sign(std::uint64_t p) {
        const Rational T1 = raw_trace(p, 1), T2 = raw_trace(p, 2);
        const std::vector<int> fits = admissible_signs(T1, T2, p);
        if (fits.empty()) fail(ErrorKind::PurityViolation, surface_.name + ": no pure Q_p at p = " + std::to_string(p));
        if (fits.size() == 1) return fits.front();
        if (p > cfg_.cubic_bound) return std::nullopt;
        return local_determinant(T1, T2, raw_trace(p, 3));
    }

    /// Discriminant D (1 for the trivial character) with det(Frob_p) = (D/p).
    Integer determinant_discriminant() {
        std::lock_guard<std::mutex> once(det_mu_);
        if (det_) return *det_;
        std::vector<Integer> cands{Integer(1)};
        for (int sign : {1, -1})
            for (const auto& K : enumerate_quadratic_fields(S_, sign)) cands.push_back(K.disc);
        std::vector<std::uint64_t> primes;
        for (auto p : primes_up_to(cfg_.determinant_bound))
            if (!is_bad(p)) primes.push_back(p);
        std::vector<std::string> used;
        std::size_t at = 0;
        const unsigned batch = std::max(1u, cfg_.threads);
        while (cands.size() > 1 && at < primes.size()) {
            const std::size_t n = std::min<std::size_t>(batch, primes.size() - at);
            auto signs = parallel_map<std::optional<int>>(n, cfg_.threads, [&](std::size_t i) { return local_sign(primes[at + i]); });
            for (std::size_t i = 0; i < n && cands.size() > 1; ++i) {
                if (!signs[i]) continue;
                const Integer P = from_u64(primes[at + i]);
                std::vector<Integer> keep;
                for (const auto& D : cands)
                    if (kronecker(D, P) == *signs[i]) keep.push_back(D);
                cands = std::move(keep);
                used.push_back(P.get_str());
            }
            at += n;
        }
        if (cands.size() != 1)
            fail(ErrorKind::DeterminantUnresolved,
                 surface_.name + ": " + std::to_string(cands.size()) + " determinant characters remain up to p = " +
                     std::to_string(cfg_.determinant_bound));
        det_ = cands.front();
        det_primes_ = std::move(used);
        return *det_;
    }
    std::vector<std::string> determinant_primes() {
        determinant_discriminant();
        std::lock_guard<std::mutex> g(det_mu_);
        return det_primes_;
    }

    int epsilon(std::uint64_t p) {
        const Integer D = determinant_discriminant();
        return D == 1 ? 1 : kronecker(D, from_u64(p));
    }

    FrobeniusData data(std::uint64_t p) {
        FrobeniusData d;
        d.p = p;
        const SurfaceCount c1 = count(p, 1), c2 = count(p, 2);
        d.N1 = c1.N;
        d.N2 = c2.N;
        d.C1 = c1.C;
        d.C2 = c2.C;
        d.T1 = ntriv_trace(c1);
        d.T2 = ntriv_trace(c2);
        d.eps = epsilon(p);
        d.t1 = d.eps * d.T1;
        d.t2 = d.T2;
        return d;
    }

    FrobeniusCharPoly charpoly(std::uint64_t p) {
        {
            std::lock_guard<std::mutex> g(mu_);
            if (auto it = polys_.find(p); it != polys_.end()) return it->second;
        }
        const FrobeniusData d = data(p);
        FrobeniusCharPoly cp = assemble_charpoly(d.t1, d.t2, p);
        std::lock_guard<std::mutex> g(mu_);
        return polys_.emplace(p, std::move(cp)).first->second;
    }

    std::vector<FrobeniusCharPoly> charpolys(const std::vector<std::uint64_t>& primes) {
        determinant_discriminant();
        return parallel_map<FrobeniusCharPoly>(primes.size(), cfg_.threads, [&](std::size_t i) { return charpoly(primes[i]); });
    }

    /// Checks the count over F_{p^3} against the prediction from Q_p.
    bool verify(std::uint64_t p) {
        const FrobeniusCharPoly cp = charpoly(p);
        const SurfaceCount c3 = count(p, 3);
        const Integer predicted = predict_count(cp, 3, epsilon(p), c3.C);
        if (predicted != from_u64(c3.N))
            fail(ErrorKind::OracleMismatch, surface_.name + " at p = " + std::to_string(p) + ": predicted N = " +
                                                predicted.get_str() + ", counted " + std::to_string(c3.N));
        return true;
    }

    CharPolyLookup lookup() {
        return [this](std::uint64_t p) { return charpoly(p); };
    }

   private:
    WeierstrassSurface surface_;
    std::vector<Integer> S_;
    RunConfig cfg_;
    std::mutex mu_, det_mu_;
    std::map<std::pair<std::uint64_t, unsigned>, SurfaceCount> counts_;
    std::map<std::uint64_t, FrobeniusCharPoly> polys_;
    std::optional<Integer> det_;
    std::vector<std::string> det_primes_;
};

/// Runs the three algorithms on a surface with the given S. Scans stop at the
/// smaller of the configured bound and the counting bound.
inline IrreducibilityCertificate certify_surface(const WeierstrassSurface& surface, const std::vector<Integer>& S,
                                                 const std::string& provenance, const RunConfig& cfg) {
    cfg.validate();
    FrobeniusEngine engine(surface, S, cfg);
    const Integer D = engine.determinant_discriminant();
    const std::uint64_t pb = std::min(cfg.prime_bound, cfg.count_bound);
    const std::uint64_t fb = std::min(cfg.field_bound, cfg.count_bound);
    IrreducibilityCertificate cert = certify(surface.name, S, provenance, engine.lookup(), pb, fb);
    cert.determinant = D;
    if (!cert.alg1.terminated || !cert.alg2.terminated || !cert.alg3.terminated) {
        if (pb < cfg.prime_bound || fb < cfg.field_bound)
            cert.hints.push_back("scans stopped at p = " + std::to_string(std::max(pb, fb)) +
                                 ", the counting bound; raise it to scan further");
    }
    return cert;
}

}  // namespace ellsurf

#endif
