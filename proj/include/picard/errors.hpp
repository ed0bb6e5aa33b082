#pragma once

#include <stdexcept>
#include <string>

namespace picard {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is zero") {}
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero") {}
};

struct ZeroInput : Error {
    ZeroInput() : Error("input is zero") {}
};

struct ZeroD : Error {
    ZeroD() : Error("companion quantity d is zero") {}
};

struct NonIntegralD : Error {
    NonIntegralD() : Error("companion quantity d is not an integer") {}
};

struct NotAmbiguousInput : Error {
    NotAmbiguousInput() : Error("input is not ambiguous") {}
};

struct InvalidK : Error {
    InvalidK() : Error("k must be a positive integer") {}
};

// Raised when a structural claim the whole construction rests on fails.
// These must never fire on valid inputs.
struct PropositionViolation : Error {
    explicit PropositionViolation(const std::string& what) : Error(what) {}
};

struct ClosureViolation : Error {
    explicit ClosureViolation(const std::string& what) : Error(what) {}
};

struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& what) : Error(what) {}
};

}  // namespace picard
