#pragma once

#include <stdexcept>
#include <string>

namespace bchlab {

enum class Errc {
    NotPrime,
    SizeExceeded,
    NoPrimitivePolyFound,
    EvenCharacteristic,
    EvenPrime,
    DivisionByZeroPoly,
    CoefficientNotInSubfield,
    NotADivisor,
    OutOfRange,
    OddM,
    EvenQ,
    MTooSmallForDelta3,
    UnsupportedResidue,
    QTooSmall,
    BadDelta,
    OutOfProvenRange,
    LambdaOne,
    KindParityMismatch,
    UnsupportedParams,
    InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace bchlab
