#pragma once

#include <stdexcept>
#include <string>

namespace trient {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotPSD : Error {
  using Error::Error;
};
struct ConvergenceFailure : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct NotUnitary : Error {
  using Error::Error;
};
struct InvalidParams : Error {
  using Error::Error;
};
struct InternalConsistency : Error {
  using Error::Error;
};
struct InconsistentDecomposition : Error {
  using Error::Error;
};
struct LengthTooSmall : Error {
  using Error::Error;
};
struct UnknownSuite : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace trient
