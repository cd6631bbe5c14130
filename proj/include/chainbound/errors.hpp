#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainbound {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// A divisor list contained the zero polynomial.
class InvalidDivisorError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class OrderNotGradedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The chain handed to chain_to_antichain is not strictly ascending.
class ChainNotStrictError : public Error {
 public:
  ChainNotStrictError(const std::string& what, std::size_t stage)
      : Error(what), stage_(stage) {}

  /// 1-based index of the offending stage.
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

/// Evaluation or search aborted because an explicit budget ran out.
/// Subclasses carry whatever partial progress is meaningful for the caller.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace chainbound
