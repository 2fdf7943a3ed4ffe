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

#ifndef ELLSURF_REPORT_HPP
#define ELLSURF_REPORT_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bad_primes.hpp"
#include "charpoly.hpp"
#include "errors.hpp"
#include "irreducibility.hpp"
#include "surface.hpp"

namespace ellsurf {

using Json = nlohmann::ordered_json;

/// One row of a char-poly table: a polynomial, or a bad prime.
struct CharPolyRow {
    std::uint64_t p = 0;
    std::optional<FrobeniusCharPoly> poly;  // empty for a bad prime
    std::optional<bool> oracle;             // F_{p^3} check, when run
};

namespace detail {

inline Json integer_list(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

inline std::vector<Integer> integer_list_from(const Json& a) {
    std::vector<Integer> out;
    for (const auto& x : a) out.emplace_back(x.get<std::string>());
    return out;
}

}  // namespace detail

/// {p, num_coeffs, den}: Q_p = sum num_coeffs[i] x^(5-i) / den, den > 0 minimal.
inline Json charpoly_to_json(const FrobeniusCharPoly& cp) {
    Integer den = 1;
    for (const auto& c : cp.Q.coefficients()) den = ilcm(den, Rational(c).get_den());
    Json nums = Json::array();
    for (int i = cp.Q.degree(); i >= 0; --i) {
        Rational v = cp.Q[i] * den;
        v.canonicalize();
        nums.push_back(v.get_num().get_str());
    }
    Json j;
    j["p"] = cp.p;
    j["num_coeffs"] = nums;
    j["den"] = den.get_str();
    j["poly"] = to_string(cp.Q, "x");
    return j;
}

inline FrobeniusCharPoly charpoly_from_json(const Json& j) {
    const Integer den(j.at("den").get<std::string>());
    const auto& nums = j.at("num_coeffs");
    if (nums.size() != 6 || den <= 0) fail(ErrorKind::Input, "malformed char-poly record");
    std::vector<Rational> c(6);
    for (std::size_t i = 0; i < 6; ++i) {
        c[5 - i] = Rational(Integer(nums[i].get<std::string>()), den);
        c[5 - i].canonicalize();
    }
    FrobeniusCharPoly cp;
    cp.p = j.at("p").get<std::uint64_t>();
    cp.Q = RatPoly(c);
    auto [s1, e] = charpoly_decompose(cp.Q);
    cp.s1 = s1;
    cp.e = e;
    return cp;
}

namespace detail {

inline Json outcome_to_json(const AlgorithmOutcome& o) {
    Json j;
    j["terminated"] = o.terminated;
    if (o.id == 1) {
        j["witness_p"] = o.witness ? Json(*o.witness) : Json(nullptr);
    } else {
        Json fields = Json::array();
        for (const auto& f : o.fields) {
            Json fj;
            fj["m"] = f.field.m.get_str();
            fj["disc"] = f.field.disc.get_str();
            fj["witness_p"] = f.witness ? Json(*f.witness) : Json(nullptr);
            fields.push_back(fj);
        }
        j["fields"] = fields;
    }
    j["scan_bound"] = o.scan_bound;
    return j;
}

inline AlgorithmOutcome outcome_from_json(const Json& j, int id) {
    AlgorithmOutcome o;
    o.id = id;
    o.terminated = j.at("terminated").get<bool>();
    o.scan_bound = j.at("scan_bound").get<std::uint64_t>();
    if (id == 1) {
        if (!j.at("witness_p").is_null()) o.witness = j.at("witness_p").get<std::uint64_t>();
    } else {
        for (const auto& fj : j.at("fields")) {
            FieldWitness w{make_quadratic_field(Integer(fj.at("m").get<std::string>())), std::nullopt};
            if (!fj.at("witness_p").is_null()) w.witness = fj.at("witness_p").get<std::uint64_t>();
            o.fields.push_back(std::move(w));
        }
    }
    return o;
}

}  // namespace detail

inline Json certificate_to_json(const IrreducibilityCertificate& c) {
    Json j;
    j["surface"] = c.surface;
    j["S"] = {{"values", detail::integer_list(c.S)}, {"provenance", c.S_provenance}};
    j["determinant"] = c.determinant ? Json(c.determinant->get_str()) : Json(nullptr);
    Json polys = Json::array();
    for (const auto& cp : c.charpolys) polys.push_back(charpoly_to_json(cp));
    j["charpolys"] = polys;
    j["alg1"] = detail::outcome_to_json(c.alg1);
    j["alg2"] = detail::outcome_to_json(c.alg2);
    j["alg3"] = detail::outcome_to_json(c.alg3);
    j["conclusion"] = to_string(c.conclusion);
    j["hints"] = c.hints;
    j["assumptions"] = c.assumptions;
    return j;
}

inline IrreducibilityCertificate certificate_from_json(const Json& j) {
    IrreducibilityCertificate c;
    c.surface = j.at("surface").get<std::string>();
    c.S = detail::integer_list_from(j.at("S").at("values"));
    c.S_provenance = j.at("S").at("provenance").get<std::string>();
    if (!j.at("determinant").is_null()) c.determinant = Integer(j.at("determinant").get<std::string>());
    for (const auto& pj : j.at("charpolys")) c.charpolys.push_back(charpoly_from_json(pj));
    c.alg1 = detail::outcome_from_json(j.at("alg1"), 1);
    c.alg2 = detail::outcome_from_json(j.at("alg2"), 2);
    c.alg3 = detail::outcome_from_json(j.at("alg3"), 3);
    const std::string concl = j.at("conclusion").get<std::string>();
    if (concl == to_string(Conclusion::LieIrreducibleSO5))
        c.conclusion = Conclusion::LieIrreducibleSO5;
    else if (concl == to_string(Conclusion::Inconclusive))
        c.conclusion = Conclusion::Inconclusive;
    else
        fail(ErrorKind::Input, "unknown conclusion '" + concl + "'");
    c.hints = j.at("hints").get<std::vector<std::string>>();
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    return c;
}

// -- tables ------------------------------------------------------------------

inline Json charpoly_table_json(const std::string& surface, const std::vector<CharPolyRow>& rows) {
    Json out;
    out["surface"] = surface;
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json j;
        if (r.poly) {
            j = charpoly_to_json(*r.poly);
        } else {
            j["p"] = r.p;
            j["bad"] = true;
        }
        if (r.oracle) j["oracle_p3"] = *r.oracle;
        arr.push_back(j);
    }
    out["rows"] = arr;
    return out;
}

inline std::string charpoly_table_markdown(const std::string& surface, const std::vector<CharPolyRow>& rows) {
    bool oracle = false;
    for (const auto& r : rows) oracle = oracle || r.oracle.has_value();
    std::ostringstream os;
    os << "## " << surface << "\n\n";
    os << "| prime | characteristic polynomial |" << (oracle ? " F_{p^3} check |" : "") << "\n";
    os << "|---|---|" << (oracle ? "---|" : "") << "\n";
    for (const auto& r : rows) {
        os << "| " << r.p << " | " << (r.poly ? to_string(r.poly->Q, "x") : std::string("Bad prime")) << " |";
        if (oracle) os << " " << (r.oracle ? (*r.oracle ? "ok" : "MISMATCH") : "") << " |";
        os << "\n";
    }
    return os.str();
}

inline std::string certificate_markdown(const IrreducibilityCertificate& c) {
    auto wit = [](const std::optional<std::uint64_t>& w) { return w ? std::to_string(*w) : std::string("none"); };
    std::ostringstream os;
    os << "## Certificate: " << c.surface << "\n\n";
    os << "- S = {";
    for (std::size_t i = 0; i < c.S.size(); ++i) os << (i ? ", " : "") << c.S[i];
    os << "} (" << c.S_provenance << ")\n";
    if (c.determinant) os << "- determinant character: (" << *c.determinant << "/p)\n";
    os << "- Algorithm 1: " << (c.alg1.terminated ? "terminates at p = " + wit(c.alg1.witness) : "no witness")
       << " (scan bound " << c.alg1.scan_bound << ")\n";
    for (const auto* o : {&c.alg2, &c.alg3}) {
        os << "- Algorithm " << o->id << " (" << (o->id == 2 ? "real" : "imaginary") << " fields): "
           << (o->terminated ? "terminates" : "does not terminate") << " (scan bound " << o->scan_bound << ")\n";
        for (const auto& f : o->fields) os << "  - Q(sqrt(" << f.field.m << ")): inert witness " << wit(f.witness) << "\n";
    }
    os << "- conclusion: " << to_string(c.conclusion) << "\n";
    for (const auto& h : c.hints) os << "- note: " << h << "\n";
    os << "- assumed:";
    for (std::size_t i = 0; i < c.assumptions.size(); ++i) os << (i ? ";" : "") << " " << c.assumptions[i];
    os << "\n";
    if (!c.charpolys.empty()) {
        os << "\n| prime | characteristic polynomial |\n|---|---|\n";
        for (const auto& cp : c.charpolys) os << "| " << cp.p << " | " << to_string(cp.Q, "x") << " |\n";
    }
    return os.str();
}

// -- invariants and bad primes --------------------------------------------------

inline Json invariants_json(const WeierstrassSurface& S, const std::vector<FiberDatum>& fibers,
                            const SurfaceInvariants& I, long rho_r0) {
    Json j;
    j["surface"] = S.name;
    Json a = Json::array();
    for (const auto& ai : S.a) a.push_back(to_string(ai, "s"));
    j["a"] = a;
    j["lambda"] = S.lambda.get_str();
    j["weight"] = I.a;
    j["euler"] = I.euler;
    j["chi"] = I.chi;
    j["pg"] = I.pg;
    j["ntriv_rank"] = I.ntriv_rank;
    j["rho_if_rank_0"] = rho_r0;
    Json fj = Json::array();
    for (const auto& f : fibers)
        fj.push_back({{"place", f.place.to_string("s")},
                      {"degree", f.place.residue_degree()},
                      {"type", f.kodaira()},
                      {"euler", f.euler}});
    j["bad_fibers"] = fj;
    return j;
}

inline std::string invariants_markdown(const WeierstrassSurface& S, const std::vector<FiberDatum>& fibers,
                                       const SurfaceInvariants& I, long rho_r0) {
    std::ostringstream os;
    os << "## Invariants: " << S.name << "\n\n";
    static const char* names[5] = {"a1", "a2", "a3", "a4", "a6"};
    for (int i = 0; i < 5; ++i)
        if (!S.a[i].is_zero()) os << "- " << names[i] << " = " << to_string(S.a[i], "s") << "\n";
    if (S.lambda != 1) os << "- integral model scaled by lambda = " << S.lambda << "\n";
    os << "- a = " << I.a << ", e(X) = " << I.euler << ", chi = " << I.chi << ", p_g = " << I.pg
       << ", non-trivial rank = " << I.ntriv_rank << ", rho (rank 0) = " << rho_r0 << "\n\n";
    os << "| place | degree | type | euler |\n|---|---|---|---|\n";
    for (const auto& f : fibers)
        os << "| " << f.place.to_string("s") << " | " << f.place.residue_degree() << " | " << f.kodaira() << " | "
           << f.euler << " |\n";
    return os.str();
}

inline Json bad_primes_json(const std::string& surface, const BadPrimeReport& r,
                            const std::optional<std::vector<Integer>>& pinned) {
    Json j;
    j["surface"] = surface;
    j["candidates"] = detail::integer_list(r.candidates);
    j["refined"] = detail::integer_list(r.refined);
    j["pinned"] = pinned ? detail::integer_list(*pinned) : Json(nullptr);
    j["two_heuristic"] = r.two_heuristic;
    Json why = Json::object();
    for (const auto& [p, s] : r.reasons) why[p.get_str()] = s;
    j["reasons"] = why;
    return j;
}

inline std::string bad_primes_markdown(const std::string& surface, const BadPrimeReport& r,
                                       const std::optional<std::vector<Integer>>& pinned) {
    auto list = [](const std::vector<Integer>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
        return s + "}";
    };
    std::ostringstream os;
    os << "## Bad primes: " << surface << "\n\n";
    os << "- candidates: " << list(r.candidates) << "\n";
    os << "- refined: " << list(r.refined) << "\n";
    if (pinned) os << "- pinned: " << list(*pinned) << "\n";
    if (r.two_heuristic) os << "- the decision at 2 rests on the fibre pattern alone\n";
    os << "\n| prime | reason |\n|---|---|\n";
    for (const auto& [p, s] : r.reasons) os << "| " << p << " | " << s << " |\n";
    return os.str();
}

}  // namespace ellsurf

#endif
