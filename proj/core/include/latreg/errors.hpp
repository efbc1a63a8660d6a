#ifndef LATREG_ERRORS_HPP
#define LATREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latreg {

/// Base class for all latreg exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally incompatible operands or malformed data (mismatched group
/// instances, bad JSON, shape mismatch).
struct StructuralError : Error {
  using Error::Error;
};

/// A documented precondition was violated by the caller.
struct ContractError : Error {
  using Error::Error;
};

/// A numerical routine failed to produce a usable result.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace latreg

#endif
