#pragma once

#include <stdexcept>
#include <string>

namespace stlplan {

/// Base class for all planner errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input document (syntax, missing/mistyped fields).
struct SchemaError : Error {
  using Error::Error;
};

/// A structural invariant of the world model or a solution is violated.
struct ValidationError : Error {
  using Error::Error;
};

/// Inconsistent planner configuration (e.g. dwell times exceeding the horizon).
struct ConfigError : Error {
  using Error::Error;
};

/// A temporal interval escapes the sampling grid.
struct HorizonError : Error {
  using Error::Error;
};

/// Precondition on operand values or dimensions not met.
struct DomainError : Error {
  using Error::Error;
};

/// Routing or planning problem admits no feasible solution.
struct InfeasibleError : Error {
  InfeasibleError(const std::string& msg, std::string family)
      : Error(msg), constraint_family(std::move(family)) {}
  /// Constraint family that blocked the search (for reports).
  std::string constraint_family;
};

/// Instance exceeds a tractability guard (brute-force oracles).
struct SizeError : Error {
  using Error::Error;
};

/// Non-finite value encountered during optimization.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace stlplan
