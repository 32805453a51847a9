#pragma once

#include <stdexcept>
#include <string>

namespace multifold {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative covariance matrix has no real spectrum within tolerance.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Leading-order enumeration would exceed the supported term count.
class ComplexityBudget : public Error {
 public:
  using Error::Error;
};

/// Working precision too low to certify the requested digits.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class UnknownFigure : public Error {
 public:
  using Error::Error;
};

}  // namespace multifold
