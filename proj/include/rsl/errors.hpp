#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsl {

enum class ErrorKind {
    NonPrime,
    EvenPrime,
    Overflow,
    DivisionByZero,
    NotADivisor,
    TablesUnavailable,
    Timeout,
    ParityViolation,
    NotASquare,
    PreconditionViolated,
    ParityMismatch,
    DuplicatePoints,
    ZeroPolynomial,
    NonPositive,
    PredicateMismatch,
    RepeatedRoot,
    NotADecomposition,
    Usage,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::EvenPrime: return "EvenPrime";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::TablesUnavailable: return "TablesUnavailable";
        case ErrorKind::Timeout: return "Timeout";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::NotASquare: return "NotASquare";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ParityMismatch: return "ParityMismatch";
        case ErrorKind::DuplicatePoints: return "DuplicatePoints";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NonPositive: return "NonPositive";
        case ErrorKind::PredicateMismatch: return "PredicateMismatch";
        case ErrorKind::RepeatedRoot: return "RepeatedRoot";
        case ErrorKind::NotADecomposition: return "NotADecomposition";
        case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

/// Library-wide exception; `kind()` identifies the failure class for the CLI.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace rsl
