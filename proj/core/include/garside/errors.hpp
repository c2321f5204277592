#pragma once

#include <stdexcept>

namespace garside {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input referenced a simple that does not exist in the germ.
struct UnknownSimple : Error {
  using Error::Error;
};

// Elements of two different germs were mixed in one operation.
struct GermMismatch : Error {
  using Error::Error;
};

// A quotient was requested for a non-divisor.
struct NotADivisor : Error {
  using Error::Error;
};

// Exact integer arithmetic left the checked 64-bit range.
struct OverflowWithoutBigInt : Error {
  using Error::Error;
};

// Norm recursion exceeded the configured node budget (GARSIDE_NODE_BUDGET).
struct BudgetExceeded : Error {
  using Error::Error;
};

// A geodesic edge profile violated the down*up* shape (implementation bug).
struct OrientationViolation : Error {
  using Error::Error;
};

// Germ file or word syntax could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// Coxeter builder rank outside the supported desk-scale range.
struct RankTooLarge : Error {
  using Error::Error;
};

}  // namespace garside
