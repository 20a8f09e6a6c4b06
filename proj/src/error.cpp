#include "maxplus/error.hpp"

namespace maxplus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kCycleMeanPositive: return "CycleMeanPositive";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kZeroPermanent: return "ZeroPermanent";
    case ErrorKind::kNotMaximalPermutation: return "NotMaximalPermutation";
    case ErrorKind::kZeroWeight: return "ZeroWeight";
    case ErrorKind::kNotDefinite: return "NotDefinite";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::kInadmissibleSupport: return "InadmissibleSupport";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kEmptyCell: return "EmptyCell";
    case ErrorKind::kPlaneUndefined: return "PlaneUndefined";
    case ErrorKind::kNotEigenvector: return "NotEigenvector";
    case ErrorKind::kNoBoundary: return "NoBoundary";
    case ErrorKind::kShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorKind::kEnumerationOverflow: return "EnumerationOverflow";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kEmptyRegion: return "EmptyRegion";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string describe_lambda(const Scalar& lambda) {
  if (lambda.is_bottom()) return "-inf";
  return to_decimal_string(lambda.value());
}

}  // namespace

CycleMeanPositiveError::CycleMeanPositiveError(Scalar lambda,
                                               std::vector<std::size_t> witness)
    : Error(ErrorKind::kCycleMeanPositive,
            "maximal cycle mean " + describe_lambda(lambda) +
                " is positive; closure does not exist"),
      lambda_(std::move(lambda)),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : Error(ErrorKind::kParseError, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + what),
      line_(line),
      column_(column) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace maxplus
