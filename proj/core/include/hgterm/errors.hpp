#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgterm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of mismatched arity or vector length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Generators violate R_{e_i} * R_{e_j}(z + e_i) = R_{e_j} * R_{e_i}(z + e_j).
class CocycleError : public Error {
 public:
  using Error::Error;
};

/// The decomposition could not classify a factor family.
class StructureError : public Error {
 public:
  StructureError(const std::string& what, std::string factor)
      : Error(what + ": " + factor), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

/// A generalized product touched a zero term.
class ZeroTermError : public Error {
 public:
  explicit ZeroTermError(std::int64_t j)
      : Error("zero term in generalized product at j = " + std::to_string(j)), j_(j) {}
  std::int64_t index() const { return j_; }

 private:
  std::int64_t j_;
};

/// A univariate polynomial does not split into linear factors over Q.
class SplittingError : public Error {
 public:
  SplittingError(const std::string& what, std::string factor)
      : Error(what + ": " + factor), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

/// An internal guarantee was violated; indicates a construction bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hgterm
