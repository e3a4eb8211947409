#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trsbound {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (term syntax, system files, matrix files, scripts).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Bad symbol/variable usage: unknown name, arity clash, duplicate declaration.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Ill-formed rewrite rule (variable left-hand side, unbound right-hand variable).
class RuleError : public Error {
 public:
  using Error::Error;
};

/// The degree of the system is composite, so no coefficient ring is available.
class CompositeDegreeError : public Error {
 public:
  CompositeDegreeError(long long degree, std::vector<long long> factors, const std::string& what)
      : Error(what), degree(degree), factors(std::move(factors)) {}

  long long degree;
  std::vector<long long> factors;  // prime factorization, ascending, with multiplicity
};

/// A critical pair does not join: the system is not locally confluent.
class NotCompleteError : public Error {
 public:
  using Error::Error;
};

/// Normalization exceeded the rewrite-step budget.
class StepBudgetError : public Error {
 public:
  using Error::Error;
};

/// Invalid matrix input or an unusable ring modulus.
class MatrixError : public Error {
 public:
  using Error::Error;
};

/// A presentation-transformation step is malformed or its side condition failed.
class TietzeError : public Error {
 public:
  TietzeError(int step, const std::string& what) : Error(what), step(step) {}

  int step;  // 1-based step number in the script
};

}  // namespace trsbound
