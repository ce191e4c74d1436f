#pragma once

#include <stdexcept>
#include <string>

namespace gptk {

enum class Errc {
    NonPrimeCharacteristic,
    DegreeCapExceeded,
    MixedFieldContexts,
    DivisionByZero,
    NotADivisor,
    ZeroPolynomial,
    CapExceeded,
    PointNotOnCurve,
    EqualPoints,
    LineIsComponent,
    FundamentalLineComponent,
    SingularMatrix,
    NotInvariant,
    ClosureCapExceeded,
    NonIntegerGenus,
    MalformedFiltration,
    NotPPower,
    NotAPartition,
    InvalidParameter,
    UnknownEntry,
    TorsionNotRational,
    NoSuitableStabilizerSubgroup,
    FixedPointViolation,
    ConsistencyCheckFailed,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace gptk
