#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersum {

/// Machine-readable category carried by every library error.
enum class ErrorKind {
  pole,
  domain,
  non_invertible,
  divergent,
  budget_exceeded,
  numerical_breakdown,
  precision_too_low,
  parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Gamma evaluated at (or numerically at) a non-positive integer.
class PoleError : public Error {
public:
  explicit PoleError(const std::string& what) : Error(ErrorKind::pole, what) {}
};

/// A theorem or series precondition does not hold.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class NonInvertibleError : public Error {
public:
  explicit NonInvertibleError(const std::string& what) : Error(ErrorKind::non_invertible, what) {}
};

class DivergentError : public Error {
public:
  explicit DivergentError(const std::string& what) : Error(ErrorKind::divergent, what) {}
};

class BudgetExceededError : public Error {
public:
  explicit BudgetExceededError(const std::string& what) : Error(ErrorKind::budget_exceeded, what) {}
};

class NumericalBreakdownError : public Error {
public:
  explicit NumericalBreakdownError(const std::string& what)
      : Error(ErrorKind::numerical_breakdown, what) {}
};

class PrecisionTooLowError : public Error {
public:
  explicit PrecisionTooLowError(const std::string& what)
      : Error(ErrorKind::precision_too_low, what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

}  // namespace hypersum
