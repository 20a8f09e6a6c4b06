#include "maxplus/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxplus {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_decimal_string(const Rational& r) {
  mpz_class den = r.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return r.get_str();
  const unsigned long places = std::max(twos, fives);
  if (places == 0) return r.get_num().get_str();

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = r.get_num() * scale / r.get_den();
  const bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

Scalar::Scalar(const Rational& value) : finite_(true), value_(value) {
  value_.canonicalize();
}

Scalar::Scalar(long value) : finite_(true), value_(value) {}

const Rational& Scalar::value() const {
  if (!finite_) throw std::logic_error("value() of bottom scalar");
  return value_;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar otimes(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom()) return Scalar::bottom();
  return Scalar(Rational(a.value() + b.value()));
}

Scalar power(const Scalar& a, const Rational& t) {
  if (a.is_bottom()) return a;
  return Scalar(Rational(a.value() * t));
}

Scalar inverse(const Scalar& a) {
  if (a.is_bottom()) throw std::domain_error("bottom has no tropical inverse");
  return Scalar(Rational(-a.value()));
}

Scalar divide(const Scalar& a, const Scalar& b) { return otimes(a, inverse(b)); }

}  // namespace maxplus
