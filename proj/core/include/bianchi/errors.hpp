#pragma once

#include <stdexcept>
#include <string>

namespace bianchi {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct DegreeCapExceeded : std::domain_error {
  explicit DegreeCapExceeded(int deg)
      : std::domain_error("polynomial degree " + std::to_string(deg) +
                          " exceeds the factorization cap of 16") {}
};

struct NotPrime : std::domain_error {
  explicit NotPrime(const std::string& what)
      : std::domain_error("not a prime element: " + what) {}
};

struct IrregularPrime : std::domain_error {
  explicit IrregularPrime(const std::string& what)
      : std::domain_error("Dedekind criterion fails, equation order is not "
                          "regular at " + what) {}
};

struct UndefinedReduction : std::domain_error {
  UndefinedReduction()
      : std::domain_error("element has negative valuation at the prime, "
                          "reduction undefined") {}
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("dimension mismatch") {}
};

struct SingularGram : std::domain_error {
  SingularGram() : std::domain_error("Gram matrix is singular") {}
};

struct Inconsistent : std::domain_error {
  Inconsistent() : std::domain_error("linear system is inconsistent") {}
};

struct UnsupportedField : std::invalid_argument {
  explicit UnsupportedField(int d)
      : std::invalid_argument("d = " + std::to_string(d) +
                              " is not one of the Euclidean fields 1,2,3,7,11") {}
};

struct RecipeViolation : std::logic_error {
  explicit RecipeViolation(const std::string& what)
      : std::logic_error("space recipe invariant failed: " + what) {}
};

struct DomainNotStable : std::logic_error {
  explicit DomainNotStable(const std::string& what)
      : std::logic_error("operator does not stabilise the domain: " + what) {}
};

struct UnsplitSpace : std::runtime_error {
  UnsplitSpace()
      : std::runtime_error("prime list exhausted before the eigenspaces "
                           "split to lines; add more primes") {}
};

struct NoAutomorphism : std::domain_error {
  NoAutomorphism()
      : std::domain_error("coefficient field carries no stored automorphism") {}
};

struct ZeroReduction : std::logic_error {
  ZeroReduction() : std::logic_error("reduced vector is zero after scaling") {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what)
      : std::invalid_argument("parse error: " + what) {}
};

}  // namespace bianchi
