#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

enum class ErrorKind {
  kDimensionMismatch,
  kCycleMeanPositive,
  kNotNormalized,
  kZeroPermanent,
  kNotMaximalPermutation,
  kZeroWeight,
  kNotDefinite,
  kZeroVector,
  kSizeLimitExceeded,
  kInadmissibleSupport,
  kInvalidInput,
  kEmptyCell,
  kPlaneUndefined,
  kNotEigenvector,
  kNoBoundary,
  kShiftOutOfRange,
  kEnumerationOverflow,
  kBudgetExceeded,
  kEmptyRegion,
  kParseError,
};

/// Stable identifier, e.g. "CycleMeanPositive".
std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// The star does not exist: some cycle has positive mean.
class CycleMeanPositiveError : public Error {
 public:
  CycleMeanPositiveError(Scalar lambda, std::vector<std::size_t> witness);

  const Scalar& lambda() const { return lambda_; }
  /// 0-based node sequence of a cycle attaining lambda.
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Scalar lambda_;
  std::vector<std::size_t> witness_;
};

/// Malformed text input; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace maxplus
