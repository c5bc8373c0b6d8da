#pragma once

#include <stdexcept>
#include <string>

namespace unigeo {

// Every failure the library can signal. One exception class, one code each,
// so callers can switch on code() instead of parsing messages.
enum class ErrorCode {
    NonPrimeModulus,
    CharacteristicTwo,
    UnsupportedField,
    ParseError,
    DivisionByZero,
    InexactDivision,
    DimensionMismatch,
    AsymmetricForm,
    ZeroVector,
    CoincidentPoints,
    CollinearPoints,
    NullCarrier,
    NullCommonPoint,
    DependentInput,
    NullLine,
    NullTriangle,
    NullProjectivePoint,
    UndefinedSpread,
    SingularCenterSystem,
    InexactField,
    WrongForm,
    NotThreeDimensional,
    IdenticalLines,
    UndefinedCase,
    InconsistentKnowns,
    ZeroQuadrance,
    SingularDenominator,
    NotPlanar,
    NotRightHexagon,
    SingularAltitude,
    NoCommonPoint,
    OutsideCone,
    ZDivisionImpossible,
    DegenerateTriangle,
    ToleranceExceeded,
    SceneError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonPrimeModulus:      return "NonPrimeModulus";
        case ErrorCode::CharacteristicTwo:    return "CharacteristicTwo";
        case ErrorCode::UnsupportedField:     return "UnsupportedField";
        case ErrorCode::ParseError:           return "ParseError";
        case ErrorCode::DivisionByZero:       return "DivisionByZero";
        case ErrorCode::InexactDivision:      return "InexactDivision";
        case ErrorCode::DimensionMismatch:    return "DimensionMismatch";
        case ErrorCode::AsymmetricForm:       return "AsymmetricForm";
        case ErrorCode::ZeroVector:           return "ZeroVector";
        case ErrorCode::CoincidentPoints:     return "CoincidentPoints";
        case ErrorCode::CollinearPoints:      return "CollinearPoints";
        case ErrorCode::NullCarrier:          return "NullCarrier";
        case ErrorCode::NullCommonPoint:      return "NullCommonPoint";
        case ErrorCode::DependentInput:       return "DependentInput";
        case ErrorCode::NullLine:             return "NullLine";
        case ErrorCode::NullTriangle:         return "NullTriangle";
        case ErrorCode::NullProjectivePoint:  return "NullProjectivePoint";
        case ErrorCode::UndefinedSpread:      return "UndefinedSpread";
        case ErrorCode::SingularCenterSystem: return "SingularCenterSystem";
        case ErrorCode::InexactField:         return "InexactField";
        case ErrorCode::WrongForm:            return "WrongForm";
        case ErrorCode::NotThreeDimensional:  return "NotThreeDimensional";
        case ErrorCode::IdenticalLines:       return "IdenticalLines";
        case ErrorCode::UndefinedCase:        return "UndefinedCase";
        case ErrorCode::InconsistentKnowns:   return "InconsistentKnowns";
        case ErrorCode::ZeroQuadrance:        return "ZeroQuadrance";
        case ErrorCode::SingularDenominator:  return "SingularDenominator";
        case ErrorCode::NotPlanar:            return "NotPlanar";
        case ErrorCode::NotRightHexagon:      return "NotRightHexagon";
        case ErrorCode::SingularAltitude:     return "SingularAltitude";
        case ErrorCode::NoCommonPoint:        return "NoCommonPoint";
        case ErrorCode::OutsideCone:          return "OutsideCone";
        case ErrorCode::ZDivisionImpossible:  return "ZDivisionImpossible";
        case ErrorCode::DegenerateTriangle:   return "DegenerateTriangle";
        case ErrorCode::ToleranceExceeded:    return "ToleranceExceeded";
        case ErrorCode::SceneError:           return "SceneError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace unigeo
