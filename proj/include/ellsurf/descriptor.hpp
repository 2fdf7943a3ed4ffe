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

#ifndef ELLSURF_DESCRIPTOR_HPP
#define ELLSURF_DESCRIPTOR_HPP

#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "parse.hpp"
#include "registry.hpp"
#include "surface.hpp"

namespace ellsurf {

// A surface file is a list of `key = value` lines. Values are quoted strings
// or bracketed integer lists; `#` starts a comment. An optional `[expected]`
// section holds golden data:
//
//   name = "case1"
//   a1 = "1 + 3*s^2*(s-1)"
//   a3 = "s^6*(s-1)^3"
//   bad_primes = [3, 7]
//
//   [expected]
//   bad_primes = [3, 7]
//   charpoly.5 = "x^5 + 4/5*x^4 + 22/25*x^3 - 22/25*x^2 - 4/5*x - 1"

struct SurfaceExpectations {
    std::optional<std::vector<Integer>> bad_primes;
    std::map<std::uint64_t, std::string> charpolys;
    std::optional<std::string> conclusion;
};

struct SurfaceDescriptor {
    std::string name;
    std::array<std::string, 5> a{"0", "0", "0", "0", "0"};  // a1 a2 a3 a4 a6
    std::optional<std::vector<Integer>> bad_primes;
    SurfaceExpectations expected;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] inline void descriptor_error(int line, const std::string& msg) {
    fail(ErrorKind::Parse, "surface file line " + std::to_string(line) + ": " + msg);
}

// strips a trailing comment that is not inside quotes
inline std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

inline std::string parse_quoted(const std::string& v, int line) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"') descriptor_error(line, "expected a quoted string");
    const std::string body = v.substr(1, v.size() - 2);
    if (body.find('"') != std::string::npos) descriptor_error(line, "stray quote");
    return body;
}

inline std::vector<Integer> parse_int_list(const std::string& v, int line) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') descriptor_error(line, "expected [p, q, ...]");
    std::vector<Integer> out;
    std::stringstream ss(v.substr(1, v.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            if (out.empty() && ss.eof()) break;
            descriptor_error(line, "empty list entry");
        }
        for (char c : item)
            if (!std::isdigit(static_cast<unsigned char>(c))) descriptor_error(line, "not a positive integer: " + item);
        out.emplace_back(item);
    }
    return out;
}

}  // namespace detail

inline SurfaceDescriptor parse_descriptor(const std::string& text) {
    SurfaceDescriptor d;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::string section;
    bool have_name = false;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = detail::trim(detail::strip_comment(raw));
        if (s.empty()) continue;
        if (s.front() == '[' && s.back() == ']' && s.find('=') == std::string::npos) {
            section = detail::trim(s.substr(1, s.size() - 2));
            if (section != "expected") detail::descriptor_error(line, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) detail::descriptor_error(line, "expected key = value");
        const std::string key = detail::trim(s.substr(0, eq)), value = detail::trim(s.substr(eq + 1));
        if (section.empty()) {
            static const std::map<std::string, int> slot{{"a1", 0}, {"a2", 1}, {"a3", 2}, {"a4", 3}, {"a6", 4}};
            if (key == "name") {
                d.name = detail::parse_quoted(value, line);
                have_name = true;
            } else if (auto it = slot.find(key); it != slot.end()) {
                d.a[it->second] = detail::parse_quoted(value, line);
            } else if (key == "bad_primes") {
                d.bad_primes = detail::parse_int_list(value, line);
            } else {
                detail::descriptor_error(line, "unknown key '" + key + "'");
            }
        } else {
            if (key == "bad_primes") {
                d.expected.bad_primes = detail::parse_int_list(value, line);
            } else if (key == "conclusion") {
                d.expected.conclusion = detail::parse_quoted(value, line);
            } else if (key.rfind("charpoly.", 0) == 0) {
                const std::string ps = key.substr(9);
                if (ps.empty() || ps.size() > 9) detail::descriptor_error(line, "bad prime in '" + key + "'");
                for (char c : ps)
                    if (!std::isdigit(static_cast<unsigned char>(c))) detail::descriptor_error(line, "bad prime in '" + key + "'");
                d.expected.charpolys[std::stoull(ps)] = detail::parse_quoted(value, line);
            } else {
                detail::descriptor_error(line, "unknown expected key '" + key + "'");
            }
        }
    }
    if (!have_name || d.name.empty()) fail(ErrorKind::Parse, "surface file has no name");
    return d;
}

inline SurfaceDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Input, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_descriptor(buf.str());
}

inline WeierstrassSurface descriptor_surface(const SurfaceDescriptor& d) {
    std::array<RatPoly, 5> raw;
    for (int i = 0; i < 5; ++i) raw[i] = parse_polynomial(d.a[i], "s");
    WeierstrassSurface S = normalize_integral_model(d.name, raw);
    if (d.bad_primes) S.declared_bad_primes = *d.bad_primes;
    return S;
}

/// A surface named on the command line: a registry id or a descriptor path.
struct ResolvedSurface {
    WeierstrassSurface surface;
    std::optional<std::vector<Integer>> pinned_S;  // registry S or file override
    const RegistryEntry* entry = nullptr;
    std::optional<SurfaceDescriptor> descriptor;
};

inline ResolvedSurface resolve_surface(const std::string& ref) {
    ResolvedSurface r;
    for (const auto& e : registry()) {
        if (e.id != ref) continue;
        r.surface = e.surface;
        if (!e.S.empty()) r.pinned_S = e.S;
        r.entry = &e;
        return r;
    }
    std::ifstream probe(ref);
    if (!probe) fail(ErrorKind::UnknownSurface, "'" + ref + "' is neither a registry id nor a readable file");
    r.descriptor = load_descriptor(ref);
    r.surface = descriptor_surface(*r.descriptor);
    r.pinned_S = r.descriptor->bad_primes;
    return r;
}

}  // namespace ellsurf

#endif
