#pragma once

#include <stdexcept>
#include <string>

namespace jointkit {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero field element") {}
};

struct ModulusMismatch : Error {
    ModulusMismatch() : Error("operands live in different prime fields") {}
};

struct NotPrime : Error {
    explicit NotPrime(unsigned long long p)
        : Error("modulus " + std::to_string(p) + " is not prime") {}
};

struct TrivialNullspace : Error {
    TrivialNullspace() : Error("matrix has full column rank, nullspace is trivial") {}
};

struct ZeroDirection : Error {
    ZeroDirection() : Error("line direction must be nonzero") {}
};

struct DependentDirections : Error {
    DependentDirections() : Error("directions are linearly dependent") {}
};

struct NotIncident : Error {
    NotIncident() : Error("point does not lie on the line") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation requires a nonzero polynomial") {}
};

struct MissingFamilies : Error {
    MissingFamilies() : Error("line system carries no family labels") {}
};

struct NoJoint : Error {
    NoJoint() : Error("point is not a joint of the system") {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("instance too large for oracle: " + what) {}
};

struct InvarianceViolation : Error {
    explicit InvarianceViolation(const std::string& what)
        : Error("transform invariance violated: " + what) {}
};

struct InfeasibleThresholds : Error {
    explicit InfeasibleThresholds(const std::string& what)
        : Error("thresholds infeasible: " + what) {}
};

struct DegreeTooSmall : Error {
    DegreeTooSmall() : Error("degree bound too small for constraint system") {}
};

struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error("bad parameters: " + what) {}
};

struct AssertionFailed : Error {
    explicit AssertionFailed(const std::string& what) : Error("check failed: " + what) {}
};

struct ExponentOverflow : Error {
    ExponentOverflow() : Error("monomial exponent overflow") {}
};

} // namespace jointkit
