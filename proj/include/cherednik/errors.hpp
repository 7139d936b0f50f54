#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct PreconditionViolation : Error {
  using Error::Error;
};

struct VarCountMismatch : Error {
  using Error::Error;
};

struct BoundTooSmall : Error {
  using Error::Error;
};

struct ProperSubsetRequired : Error {
  using Error::Error;
};

struct DataIntegrity : Error {
  using Error::Error;
};

}  // namespace cherednik
