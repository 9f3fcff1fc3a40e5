#pragma once

#include <stdexcept>
#include <string>

namespace starlike {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Margin queried outside the region's validity window.
struct ValidityError : Error {
    using Error::Error;
};

// Class or region parameter violates a hypothesis (|b| > 1, m > 2, alpha outside [0,1), ...).
struct ParameterError : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of an operation (e.g. r >= 1).
struct DomainError : Error {
    using Error::Error;
};

// Root isolation found no sign change on (0,1) after grid refinement.
struct NoRootError : Error {
    using Error::Error;
};

// Evaluation point too close to a pole/zero of a rational factor.
struct SingularityError : Error {
    using Error::Error;
};

// Requested operation has no established result (K3 sharpness, b = 0).
struct UnsupportedError : Error {
    using Error::Error;
};

// A Monte Carlo sample violated a proved bound; the message carries the witness.
struct ViolationError : Error {
    using Error::Error;
};

}  // namespace starlike
