#pragma once

#include <stdexcept>
#include <string>

namespace obsq {

// Root of the library's error hierarchy. The CLI maps anything derived from
// Error that is not a script error (SyntaxError/SemanticError) to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric domain problems: invalid amplitudes, arguments outside a model's
// domain, impossible renormalization, and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A state failed its norm constraint. The sector tells which block did.
class NormalizationError : public DomainError {
 public:
  enum class Sector { Quantum, Membership };

  NormalizationError(Sector sector, double actual)
      : DomainError(format(sector, actual)), sector_(sector), actual_(actual) {}

  Sector sector() const { return sector_; }
  double actual() const { return actual_; }

 private:
  static std::string format(Sector sector, double actual) {
    return std::string(sector == Sector::Quantum ? "quantum" : "membership") +
           " amplitudes are not normalized (squared sum = " +
           std::to_string(actual) + ")";
  }

  Sector sector_;
  double actual_;
};

// A value fell outside its documented range (e.g. membership amplitude of a
// user-constructed state outside [0,1]).
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Gate construction with blocks of mismatched size.
class ArityError : public Error {
 public:
  using Error::Error;
};

// A complex-valued matrix was offered for the membership block.
class RealnessError : public Error {
 public:
  using Error::Error;
};

// An unknown gate/projection/model name.
class NameError : public Error {
 public:
  using Error::Error;
};

// Script text that does not match the grammar.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& expected,
              const std::string& got)
      : Error("line " + std::to_string(line) + ", col " +
              std::to_string(column) + ": expected " + expected + ", got " +
              got),
        line_(line),
        column_(column),
        expected_(expected) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

// Script text that is grammatical but meaningless: undeclared identifiers,
// duplicate declarations, arity mismatches, reports with no subject, ...
class SemanticError : public Error {
 public:
  SemanticError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace obsq
