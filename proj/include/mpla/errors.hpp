#pragma once

#include <stdexcept>
#include <string>

namespace mpla {

enum class ErrorKind {
    DimensionMismatch,
    NotAComplex,
    MalformedTensor,
    ArityMismatch,
    SpaceMismatch,
    InvalidInput,
    NotRotaBaxter,
    NotRestrictable,
    CoefficientMismatch,
    ShapeMismatch,
    NotACocycle,
    NotASection,
    NonzeroMiddleComponent,
    ParseError,
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::MalformedTensor: return "MalformedTensor";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorKind::NotRestrictable: return "NotRestrictable";
    case ErrorKind::CoefficientMismatch: return "CoefficientMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::NonzeroMiddleComponent: return "NonzeroMiddleComponent";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind), detail_(what) {}
    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace mpla
