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

// ellsurf: Frobenius char polys and irreducibility certificates for elliptic
// surfaces with multiplicative fibres.
//
// Exit status: 0 certified (or plain success), 2 inconclusive, 1 error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellsurf/ellsurf.hpp"

using namespace ellsurf;

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Options {
    std::string surface;
    std::uint64_t primes_up_to = 0;
    std::vector<std::uint64_t> primes;
    bool oracle = false;
    std::string format = "md";
    RunConfig cfg;
};

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::Json;
    if (f == "md" || f == "markdown") return OutputFormat::Markdown;
    fail(ErrorKind::Input, "unknown format '" + f + "' (json or md)");
}

// Multiplicative fibres only; anything else is refused up front.
std::vector<FiberDatum> checked_fibers(const WeierstrassSurface& S) {
    std::vector<FiberDatum> fibers = classify_fibers(S);
    if (!multiplicative_only(fibers)) {
        std::string where;
        for (const auto& f : fibers)
            if (f.kind == FiberKind::Additive) where += (where.empty() ? "" : ", ") + f.place.to_string("s");
        fail(ErrorKind::AdditiveBaseFiber, S.name + " has additive fibres at " + where);
    }
    return fibers;
}

std::vector<Integer> working_S(const ResolvedSurface& r, std::string* provenance) {
    if (r.pinned_S) {
        if (provenance) *provenance = "pinned";
        return *r.pinned_S;
    }
    if (provenance) *provenance = "computed";
    return bad_primes(r.surface).refined;
}

// Surface files may carry an [expected] section; misses go to stderr.
bool expectation(bool met, const std::string& what) {
    if (!met) std::cerr << "ellsurf: expectation not met: " << what << "\n";
    return met;
}

std::string int_list(const std::vector<Integer>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + "]";
}

int cmd_charpoly(const Options& o) {
    const ResolvedSurface r = resolve_surface(o.surface);
    checked_fibers(r.surface);
    std::vector<std::uint64_t> primes = o.primes;
    if (o.primes_up_to) primes = primes_up_to(o.primes_up_to);
    for (auto p : primes)
        if (!is_prime_u64_small(p)) fail(ErrorKind::Input, std::to_string(p) + " is not prime");
    FrobeniusEngine engine(r.surface, working_S(r, nullptr), o.cfg);
    std::vector<std::uint64_t> good;
    for (auto p : primes)
        if (!engine.is_bad(p)) good.push_back(p);
    const std::vector<FrobeniusCharPoly> polys = engine.charpolys(good);
    std::vector<CharPolyRow> rows;
    std::size_t k = 0;
    for (auto p : primes) {
        CharPolyRow row;
        row.p = p;
        if (!engine.is_bad(p)) {
            row.poly = polys[k++];
            if (o.oracle) {
                try {
                    row.oracle = engine.verify(p);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::OracleMismatch) throw;
                    row.oracle = false;
                }
            }
        }
        rows.push_back(std::move(row));
    }
    if (parse_format(o.format) == OutputFormat::Json)
        std::cout << charpoly_table_json(r.surface.name, rows).dump(2) << "\n";
    else
        std::cout << charpoly_table_markdown(r.surface.name, rows);
    bool ok = true;
    for (const auto& row : rows)
        if (row.oracle && !*row.oracle) ok = false;
    if (r.descriptor)
        for (const auto& row : rows) {
            auto it = r.descriptor->expected.charpolys.find(row.p);
            if (it == r.descriptor->expected.charpolys.end()) continue;
            const std::string got = row.poly ? to_string(row.poly->Q, "x") : std::string("bad");
            const bool same = row.poly && row.poly->Q == parse_polynomial(it->second, "x");
            ok = expectation(same, "Q_" + std::to_string(row.p) + " = " + got + ", expected " + it->second) && ok;
        }
    return ok ? kExitCertified : kExitError;
}

int cmd_certify(const Options& o) {
    const ResolvedSurface r = resolve_surface(o.surface);
    checked_fibers(r.surface);
    std::string provenance;
    const std::vector<Integer> S = working_S(r, &provenance);
    IrreducibilityCertificate cert = certify_surface(r.surface, S, provenance, o.cfg);

    // A pinned S that differs from the computed one gets a second run.
    std::optional<IrreducibilityCertificate> alternate;
    if (provenance == "pinned") {
        const std::vector<Integer> computed = bad_primes(r.surface).refined;
        if (computed != S) alternate = certify_surface(r.surface, computed, "computed", o.cfg);
    }
    if (parse_format(o.format) == OutputFormat::Json) {
        Json j = certificate_to_json(cert);
        if (alternate) j["alternate"] = certificate_to_json(*alternate);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << certificate_markdown(cert);
        if (alternate) std::cout << "\n" << certificate_markdown(*alternate);
    }
    if (r.descriptor && r.descriptor->expected.conclusion)
        expectation(*r.descriptor->expected.conclusion == to_string(cert.conclusion),
                    std::string("conclusion ") + to_string(cert.conclusion) + ", expected " +
                        *r.descriptor->expected.conclusion);
    return cert.conclusion == Conclusion::LieIrreducibleSO5 ? kExitCertified : kExitInconclusive;
}

int cmd_invariants(const Options& o) {
    const ResolvedSurface r = resolve_surface(o.surface);
    const std::vector<FiberDatum> fibers = checked_fibers(r.surface);
    const SurfaceInvariants I = invariants(r.surface, fibers);
    const long rho = shioda_tate_rho(fibers, 0);
    if (parse_format(o.format) == OutputFormat::Json)
        std::cout << invariants_json(r.surface, fibers, I, rho).dump(2) << "\n";
    else
        std::cout << invariants_markdown(r.surface, fibers, I, rho);
    return kExitCertified;
}

int cmd_badprimes(const Options& o) {
    const ResolvedSurface r = resolve_surface(o.surface);
    checked_fibers(r.surface);
    const BadPrimeReport report = bad_primes(r.surface);
    if (parse_format(o.format) == OutputFormat::Json)
        std::cout << bad_primes_json(r.surface.name, report, r.pinned_S).dump(2) << "\n";
    else
        std::cout << bad_primes_markdown(r.surface.name, report, r.pinned_S);
    if (r.descriptor && r.descriptor->expected.bad_primes &&
        !expectation(*r.descriptor->expected.bad_primes == report.refined,
                     "refined bad primes " + int_list(report.refined) + ", expected " +
                         int_list(*r.descriptor->expected.bad_primes)))
        return kExitError;
    return kExitCertified;
}

int cmd_list() {
    for (const auto& e : registry()) std::cout << e.id << "\t" << e.title << "\n";
    return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius char polys and irreducibility certificates for elliptic surfaces"};
    app.require_subcommand(1);
    Options o;
    o.cfg.threads = default_thread_count();

    auto add_surface = [&](CLI::App* sub) {
        sub->add_option("--surface", o.surface, "registry id or surface file")->required();
        sub->add_option("--format", o.format, "json or md")->capture_default_str();
    };

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomials Q_p");
    add_surface(charpoly);
    auto* upto = charpoly->add_option("--primes-up-to", o.primes_up_to, "all primes up to N");
    auto* list = charpoly->add_option("--primes", o.primes, "comma separated primes")->delimiter(',');
    upto->excludes(list);
    list->excludes(upto);
    charpoly->add_flag("--oracle", o.oracle, "check each row against a count over F_{p^3}");
    charpoly->add_option("--threads", o.cfg.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* certify = app.add_subcommand("certify", "run the three irreducibility algorithms");
    add_surface(certify);
    certify->add_option("--prime-bound", o.cfg.prime_bound, "scan bound for algorithm 1")->capture_default_str();
    certify->add_option("--field-bound", o.cfg.field_bound, "scan bound for algorithms 2 and 3")->capture_default_str();
    certify->add_option("--count-bound", o.cfg.count_bound, "largest prime to count points at")->capture_default_str();
    certify->add_option("--threads", o.cfg.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* inv = app.add_subcommand("invariants", "fibres, Euler number, genus and ranks");
    add_surface(inv);
    auto* bad = app.add_subcommand("badprimes", "candidate and refined bad primes");
    add_surface(bad);
    auto* ls = app.add_subcommand("list", "registry surfaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        o.cfg.validate();
        if (*charpoly) {
            if (!*upto && !*list) fail(ErrorKind::Input, "charpoly needs --primes-up-to or --primes");
            return cmd_charpoly(o);
        }
        if (*certify) return cmd_certify(o);
        if (*inv) return cmd_invariants(o);
        if (*bad) return cmd_badprimes(o);
        if (*ls) return cmd_list();
    } catch (const Error& e) {
        std::cerr << "ellsurf: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "ellsurf: internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
