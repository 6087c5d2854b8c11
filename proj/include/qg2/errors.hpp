#pragma once

#include <stdexcept>
#include <string>

namespace qg2 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeCoefficient : public Error {
 public:
  using Error::Error;
};

class CoefficientOverflow : public Error {
 public:
  using Error::Error;
};

class NotInLattice : public Error {
 public:
  using Error::Error;
};

class EmptyMonomial : public Error {
 public:
  using Error::Error;
};

class InvalidNode : public Error {
 public:
  using Error::Error;
};

class StepMismatch : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class NotAPullback : public Error {
 public:
  using Error::Error;
};

class SecondDominantFound : public Error {
 public:
  using Error::Error;
};

/// The sl2 restriction of a generated monomial is not covered by its families.
class InconsistentRestriction : public Error {
 public:
  using Error::Error;
};

class TermCapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class IdentityFails : public Error {
 public:
  using Error::Error;
};

class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qg2
