#pragma once

#include <stdexcept>
#include <string>

namespace trisq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight/character parity mismatch: chi(-1) != (-1)^k.
class ParityMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidFactorization : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Eta quotient whose leading q-power is not a non-negative integer.
class FractionalValuation : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpace : public Error {
 public:
  using Error::Error;
};

/// (a, b) outside the domain of the explicit decompositions.
class UnsupportedParams : public Error {
 public:
  using Error::Error;
};

/// Identity claim whose denominators all vanish up to the search depth.
class DegenerateClaim : public Error {
 public:
  using Error::Error;
};

class NoAdmissibleIndex : public Error {
 public:
  using Error::Error;
};

}  // namespace trisq
