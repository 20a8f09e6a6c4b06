#include "maxplus/hilbert.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "maxplus/definite.hpp"
#include "maxplus/error.hpp"
#include "maxplus/path_algebra.hpp"

namespace maxplus {

Distance::Distance(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

Distance Distance::infinite() {
  Distance d;
  d.infinite_ = true;
  return d;
}

const Rational& Distance::value() const {
  if (infinite_) throw std::logic_error("value() of infinite distance");
  return value_;
}

bool operator==(const Distance& a, const Distance& b) {
  if (a.infinite_ != b.infinite_) return false;
  return a.infinite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Matrix tilde(const Matrix& a) {
  require_definite(a, "tilde");
  Matrix t = a;
  for (std::size_t i = 0; i < a.rows(); ++i) t(i, i) = Scalar::bottom();
  return t;
}

namespace {

bool has_off_diagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j).is_finite()) return true;
  return false;
}

void require_point(const Matrix& a, const Vector& y) {
  if (y.size() != a.rows())
    fail(ErrorKind::kInvalidInput, "point length differs from matrix size");
  if (!y.has_full_support())
    fail(ErrorKind::kInvalidInput, "point must have full support");
}

void require_eigenvector(const Matrix& a, const Vector& y) {
  require_definite(a, "hilbert");
  require_point(a, y);
  if (!eig_membership(a, y))
    fail(ErrorKind::kNotEigenvector, "point is not in eig(A)");
}

Rational plane_gap(const Matrix& a, std::size_t i, std::size_t j, const Vector& y) {
  return y[i].value() - y[j].value() - a(i, j).value();
}

void require_plane(const Matrix& a, std::size_t i, std::size_t j, const Vector& y) {
  require_definite(a, "supporting plane");
  require_point(a, y);
  if (i >= a.rows() || j >= a.rows() || i == j || a(i, j).is_bottom())
    fail(ErrorKind::kPlaneUndefined, "no supporting plane at (" + std::to_string(i + 1) +
                                         "," + std::to_string(j + 1) + ")");
}

}  // namespace

bool shift_in_range(const Matrix& a, const Rational& mu) {
  if (mu >= 0) return false;
  const Scalar lambda = max_cycle_mean(tilde(a)).lambda;
  return lambda.is_bottom() || lambda <= Scalar(mu);
}

InnerFamilyMember shifted_definite(const Matrix& a, const Rational& mu) {
  if (!shift_in_range(a, mu))
    fail(ErrorKind::kShiftOutOfRange, "shift " + mu.get_str() + " outside the valid range");
  Matrix m = shifted(a, -mu);
  for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) = Scalar::unit();
  return {mu, std::move(m)};
}

Distance hilbert_distance(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) fail(ErrorKind::kDimensionMismatch, "vector lengths differ");
  if (x.support() != y.support()) return Distance::infinite();
  std::optional<Rational> up, down;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_bottom()) continue;
    Rational d = x[i].value() - y[i].value();
    if (!up || d > *up) up = d;
    Rational e = -d;
    if (!down || e > *down) down = e;
  }
  if (!up) return Distance(Rational(0));
  return Distance(Rational(*up + *down));
}

Rational range_seminorm(const Vector& x) {
  std::optional<Rational> lo, hi;
  for (const auto& e : x) {
    if (e.is_bottom()) continue;
    if (!lo || e.value() < *lo) lo = e.value();
    if (!hi || e.value() > *hi) hi = e.value();
  }
  if (!lo) fail(ErrorKind::kZeroVector, "range seminorm of the zero vector");
  return *hi - *lo;
}

Vector nearest_on_plane(const Matrix& a, std::size_t i, std::size_t j, const Vector& y) {
  require_plane(a, i, j, y);
  Vector p = y;
  p[i] = otimes(a(i, j), y[j]);
  return p;
}

Rational dist_to_plane(const Matrix& a, std::size_t i, std::size_t j, const Vector& y) {
  require_plane(a, i, j, y);
  return plane_gap(a, i, j, y);
}

Rational dist_to_boundary_unchecked(const Matrix& a, const Vector& y) {
  require_square(a, "dist_to_boundary_unchecked");
  require_point(a, y);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j || a(i, j).is_bottom()) continue;
      Rational g = plane_gap(a, i, j, y);
      if (!best || g < *best) best = g;
    }
  if (!best) fail(ErrorKind::kNoBoundary, "no finite off-diagonal entry");
  return *best;
}

BoundaryDistance dist_to_boundary(const Matrix& a, const Vector& y) {
  require_eigenvector(a, y);
  const Rational best = dist_to_boundary_unchecked(a, y);
  BoundaryDistance out;
  out.distance = Distance(best);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j).is_finite() && plane_gap(a, i, j, y) == best)
        out.tight_planes.emplace_back(i, j);
  out.nearest_plane = out.tight_planes.front();
  out.nearest_point = y;
  out.nearest_point[out.nearest_plane.first] =
      otimes(a(out.nearest_plane.first, out.nearest_plane.second), y[out.nearest_plane.second]);
  return out;
}

InteriorResult interior_membership(const Matrix& a, const Vector& y) {
  require_eigenvector(a, y);
  InteriorResult r;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j || a(i, j).is_bottom()) continue;
      r.mu = oplus(r.mu, Scalar(Rational(a(i, j).value() + y[j].value() - y[i].value())));
    }
  r.interior = r.mu < Scalar::unit();
  return r;
}

Distance inscribed_radius(const Matrix& a) {
  const Matrix t = tilde(a);
  if (!has_off_diagonal(a)) fail(ErrorKind::kNoBoundary, "no finite off-diagonal entry");
  const Scalar lambda = max_cycle_mean(t).lambda;
  if (lambda.is_bottom()) return Distance::infinite();
  return Distance(Rational(-lambda.value()));
}

bool level_set_check(const Matrix& a, const Rational& mu, const Vector& y) {
  const InnerFamilyMember member = shifted_definite(a, mu);
  const BoundaryDistance d = dist_to_boundary(a, y);
  const bool at_level = d.distance == Distance(Rational(-mu));

  const Matrix& am = member.matrix;
  bool on_inner_boundary = false;
  if (eig_membership(am, y)) {
    for (std::size_t i = 0; i < am.rows() && !on_inner_boundary; ++i)
      for (std::size_t j = 0; j < am.cols(); ++j)
        if (i != j && am(i, j).is_finite() && plane_gap(am, i, j, y) == 0) {
          on_inner_boundary = true;
          break;
        }
  }
  if (at_level != on_inner_boundary)
    throw std::logic_error("level set and inner boundary disagree");
  return at_level;
}

Matrix hilbert_ball_matrix(const Vector& center, const Rational& radius) {
  if (center.size() == 0 || !center.has_full_support())
    fail(ErrorKind::kInvalidInput, "ball center must have full support");
  if (radius <= 0) fail(ErrorKind::kInvalidInput, "ball radius must be positive");
  const std::size_t n = center.size();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d(i, j) = i == j ? Scalar::unit()
                       : Scalar(Rational(center[i].value() - center[j].value() - radius));
  return d;
}

}  // namespace maxplus
