#pragma once

#include <stdexcept>
#include <string>

namespace csplab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input from the caller: bad parameters, unsupported shapes, caps.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public UsageError {
 public:
  using UsageError::UsageError;
};

class CapExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

class UnknownFamily : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotNearlyFree : public UsageError {
 public:
  using UsageError::UsageError;
};

class ShapeViolation : public UsageError {
 public:
  using UsageError::UsageError;
};

class NonCommutingActions : public UsageError {
 public:
  using UsageError::UsageError;
};

class StatisticMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class InexactDivision : public InternalError {
 public:
  using InternalError::InternalError;
};

class NegativeExponent : public InternalError {
 public:
  using InternalError::InternalError;
};

/// f(omega_d) is not a rational integer: the residue mod Phi_d has positive
/// degree. Sieve checkers record this per element instead of propagating.
class NonIntegerEvaluation : public Error {
 public:
  using Error::Error;
};

}  // namespace csplab
