#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bicheb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed numeric input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The fast transform only handles power-of-two extents.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// A point or argument lies outside the region where the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The sampled function produced NaN or Inf at a grid node.
class SamplingError : public Error {
 public:
  SamplingError(const std::string& what, double x, double y)
      : Error(what), x_(x), y_(y) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

 private:
  double x_;
  double y_;
};

/// The adaptive builder hit its degree cap before the tail fell below tol.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, int last_degree, double tail)
      : Error(what), last_degree_(last_degree), tail_(tail) {}

  int last_degree() const noexcept { return last_degree_; }
  /// Largest |coefficient| in the last two rows/columns of the final block.
  double tail() const noexcept { return tail_; }

 private:
  int last_degree_;
  double tail_;
};

/// Syntax errors in expressions or coefficient documents. `position` is a
/// 0-based character offset into the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed document whose contents break an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Expression evaluation produced a non-finite value or hit a singularity.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::string subexpression)
      : Error(what), subexpression_(std::move(subexpression)) {}

  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicheb
