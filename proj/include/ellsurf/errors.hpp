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

#ifndef ELLSURF_ERRORS_HPP
#define ELLSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellsurf {

enum class ErrorKind {
    Domain,
    Parse,
    Nondegenerate,
    EulerMismatch,
    AdditiveBaseFiber,
    UnfactoredCofactor,
    UncertifiedPrime,
    AdditiveFiberAtGoodPrime,
    NonIntegralTrace,
    PurityViolation,
    IntegralityViolation,
    OracleMismatch,
    Input,
    MissingCharPoly,
    UnknownSurface,
    DeterminantUnresolved,
};

inline const char* to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Nondegenerate: return "NondegenerateError";
        case ErrorKind::EulerMismatch: return "EulerMismatch";
        case ErrorKind::AdditiveBaseFiber: return "AdditiveBaseFiber";
        case ErrorKind::UnfactoredCofactor: return "UnfactoredCofactor";
        case ErrorKind::UncertifiedPrime: return "UncertifiedPrime";
        case ErrorKind::AdditiveFiberAtGoodPrime: return "AdditiveFiberAtGoodPrime";
        case ErrorKind::NonIntegralTrace: return "NonIntegralTrace";
        case ErrorKind::PurityViolation: return "PurityViolation";
        case ErrorKind::IntegralityViolation: return "IntegralityViolation";
        case ErrorKind::OracleMismatch: return "OracleMismatch";
        case ErrorKind::Input: return "InputError";
        case ErrorKind::MissingCharPoly: return "MissingCharPoly";
        case ErrorKind::UnknownSurface: return "UnknownSurface";
        case ErrorKind::DeterminantUnresolved: return "DeterminantUnresolved";
    }
    return "Error";
}

/// Every failure raised by the library carries a kind so the CLI can map it
/// to a diagnostic without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ellsurf

#endif
