#pragma once

#include <stdexcept>

namespace blocksep {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSquareError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NotHermitianError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct FamilyInvalidError : Error { using Error::Error; };
struct ResidualTooLargeError : Error { using Error::Error; };
struct InconsistentInputError : Error { using Error::Error; };
struct NotNegativeError : Error { using Error::Error; };
struct NotNormalError : Error { using Error::Error; };
struct InvalidDimensionError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace blocksep
