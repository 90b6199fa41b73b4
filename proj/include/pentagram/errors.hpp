#pragma once

#include <stdexcept>
#include <string>

namespace pentagram {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A map or formula hit a vanishing denominator.
struct SingularState : Error { using Error::Error; };
/// Bracket formulas requested for n < 2k-1.
struct UnstableRange : Error { using Error::Error; };
struct DegeneratePolygon : Error { using Error::Error; };
struct SingularConfiguration : Error { using Error::Error; };
/// Polynomial division that was expected to be exact left a remainder.
struct ExactDivisionFailure : Error { using Error::Error; };
struct BranchUnavailable : Error { using Error::Error; };
struct ToleranceExceeded : Error { using Error::Error; };
struct DegenerateQuadruple : Error { using Error::Error; };
/// Scalar division by an exact zero.
struct ZeroDivision : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };

}  // namespace pentagram
