#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

// Base of every error raised by the library. Callers that only care about
// "something was rejected" catch this; tests match the concrete subclasses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(int lhs, int rhs)
      : Error("mismatched number of arrows: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotInSubalgebra : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class IllDefined : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncg
