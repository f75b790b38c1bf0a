#ifndef CRITPT_ERRORS_HPP
#define CRITPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace critpt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts, or a matrix is too small.
class DimensionError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// The operation has no meaning for this input (e.g. leading part of 0).
class UndefinedInput : public Error {
public:
  using Error::Error;
};

/// A ProblemShape violates p < n, d0 >= 1 or d_i >= 2.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Malformed polynomial text or instance file. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// A rational series claimed to be a polynomial does not terminate.
class NonPolynomialSeries : public Error {
public:
  using Error::Error;
};

/// Internal invariant broken (inexact division, nonzero composite, ...).
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Input exceeds the sizes this library is willing to handle.
class SizeGuardError : public Error {
public:
  using Error::Error;
};

class EmptyMatrixError : public Error {
public:
  using Error::Error;
};

/// The Macaulay matrix at the requested degree does not contain a Groebner basis.
/// The pair names the S-pair whose normal form was nonzero; (-1, gen) means that
/// input generator `gen` did not reduce to zero.
class InsufficientDegree : public Error {
public:
  InsufficientDegree(const std::string& what, int first, int second)
    : Error(what), first_(first), second_(second) {}

  int first() const { return first_; }
  int second() const { return second_; }

private:
  int first_;
  int second_;
};

/// The degree scan exhausted its budget; the caller should resample.
class GenericityFailure : public Error {
public:
  using Error::Error;
};

/// The ideal has an infinite staircase.
class PositiveDimension : public Error {
public:
  using Error::Error;
};

}  // namespace critpt

#endif  // CRITPT_ERRORS_HPP
