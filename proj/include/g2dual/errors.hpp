#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

enum class Errc {
    // algebra
    ZeroDenominator,
    ZeroDivisor,
    DivisionByZero,
    BothZero,
    ZeroInput,
    MixedRadical,
    InvalidDiscriminant,
    // hyperelliptic
    NonMonicU,
    InvalidMumford,
    InfinityLeadingTerm,
    NonExactDivision,
    InvalidInput,
    UnsupportedOddDegree,
    // dual curve pipeline
    SingularCubic,
    IdentityFailure,
    WrongAmbientRadical,
    DegenerateModel,
    NonSquarefreeModulus,
    AdmissibilityUndecided,
    // parsing
    SyntaxError,
    UnknownVariable,
    NegativeExponent,
    // catch-all for broken internal invariants
    Internal,
};

const char* errc_name(Errc c);

// IdentityFailure and Internal signal an arithmetic bug rather than bad input.
bool errc_is_internal(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace g2
