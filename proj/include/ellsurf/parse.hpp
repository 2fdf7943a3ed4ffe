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

#ifndef ELLSURF_PARSE_HPP
#define ELLSURF_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "polynomial.hpp"

namespace ellsurf {

namespace detail {

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*      division by constants only
//   power  := atom ['^' digits]             no chaining
//   atom   := digits | var | '(' expr ')'
class PolyParser {
   public:
    PolyParser(std::string_view text, std::string_view var) : s_(text), var_(var) {}

    RatPoly run() {
        skip();
        if (pos_ >= s_.size()) error("empty polynomial");
        RatPoly r = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

   private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_atom_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c));
    }

    RatPoly expr() {
        RatPoly r;
        if (eat('-'))
            r = -term();
        else {
            eat('+');
            r = term();
        }
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    RatPoly term() {
        RatPoly r = power();
        for (;;) {
            if (eat('*')) {
                r = r * power();
            } else if (eat('/')) {
                RatPoly d = power();
                if (d.degree() > 0) error("division by a non-constant");
                if (d.is_zero()) error("division by zero");
                r = r * (Rational(1) / d.leading());
            } else {
                if (at_atom_start()) error("implicit multiplication is not allowed");
                return r;
            }
        }
    }

    RatPoly power() {
        RatPoly base = atom();
        if (!eat('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("exponent must be a non-negative integer");
        const std::string digits(s_.substr(start, pos_ - start));
        if (digits.size() > 4) error("exponent too large");
        if (eat('^')) error("chained exponents are ambiguous");
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }

    RatPoly atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatPoly r = expr();
            if (!eat(')')) error("missing ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (s_.substr(start, pos_ - start) != var_)
                error("unknown symbol '" + std::string(s_.substr(start, pos_ - start)) + "'");
            return RatPoly::x();
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial with rational coefficients in one variable.
inline RatPoly parse_polynomial(std::string_view text, std::string_view var = "s") {
    return detail::PolyParser(text, var).run();
}

}  // namespace ellsurf

#endif
