#pragma once

// Scalars of the max-plus semiring R_max = Q u {-inf}.
//
//   a (+) b = max(a, b)     neutral element: bottom (-inf)
//   a (x) b = a + b         neutral element: unit (0), absorbing: bottom
//
// Finite values are exact rationals backed by GMP, so equality is exact.

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace maxplus {

using Rational = mpq_class;

/// Canonical rational num/den.
Rational make_rational(long num, long den = 1);

/// "-1.5" when the denominator has only factors 2 and 5, otherwise "p/q".
std::string to_decimal_string(const Rational& r);

class Scalar {
 public:
  /// Bottom.
  Scalar() = default;
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(long value);             // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT

  static Scalar bottom() { return Scalar(); }
  static Scalar unit() { return Scalar(0L); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /// The rational value; throws std::logic_error on bottom.
  const Rational& value() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  bool finite_ = false;
  Rational value_;
};

/// max with bottom as identity.
Scalar oplus(const Scalar& a, const Scalar& b);
/// Sum; bottom absorbs.
Scalar otimes(const Scalar& a, const Scalar& b);
/// t-th power = t * a; bottom^t = bottom.
Scalar power(const Scalar& a, const Rational& t);
/// Tropical inverse (negation). Throws std::domain_error on bottom.
Scalar inverse(const Scalar& a);

/// a (x) b^{-1}, i.e. a - b, with bottom - finite = bottom.
/// Throws std::domain_error when b is bottom.
Scalar divide(const Scalar& a, const Scalar& b);

}  // namespace maxplus
