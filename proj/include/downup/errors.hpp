#pragma once

#include <stdexcept>
#include <string>

namespace downup {

enum class Errc {
    ModeMismatch,
    DivisionByZero,
    ZeroInput,
    InvalidParameter,
    PresentationMismatch,
    ParameterMismatch,
    ZeroVector,
    TorsionParameter,
    UnverifiedMap,
    RootMismatch,
    NonNoetherian,
    DegenerateBeta,
    RIsOne,
    TorsionRequired,
    ZeroLambda,
    ZeroGamma,
    ParseError,
    ReductionFuelExhausted,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ModeMismatch: return "ModeMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::PresentationMismatch: return "PresentationMismatch";
        case Errc::ParameterMismatch: return "ParameterMismatch";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::TorsionParameter: return "TorsionParameter";
        case Errc::UnverifiedMap: return "UnverifiedMap";
        case Errc::RootMismatch: return "RootMismatch";
        case Errc::NonNoetherian: return "NonNoetherian";
        case Errc::DegenerateBeta: return "DegenerateBeta";
        case Errc::RIsOne: return "RIsOne";
        case Errc::TorsionRequired: return "TorsionRequired";
        case Errc::ZeroLambda: return "ZeroLambda";
        case Errc::ZeroGamma: return "ZeroGamma";
        case Errc::ParseError: return "ParseError";
        case Errc::ReductionFuelExhausted: return "ReductionFuelExhausted";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    Errc code_;
};

}  // namespace downup
