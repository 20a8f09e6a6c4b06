#pragma once

// Hilbert projective distances inside the eigenspace of a definite matrix,
// the inner family A_mu and inscribed balls.
//
// Points y are full-support vectors; the supporting plane X_ij of eig(A)
// is {x : x_i - x_j = A_ij} for finite off-diagonal A_ij.

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Nonnegative exact distance, or +inf.
class Distance {
 public:
  Distance() = default;
  explicit Distance(Rational value);
  static Distance infinite();

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  friend bool operator==(const Distance& a, const Distance& b);
  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);

 private:
  bool infinite_ = false;
  Rational value_;
};

using Plane = std::pair<std::size_t, std::size_t>;

struct BoundaryDistance {
  Distance distance;
  /// Lexicographically first plane attaining the distance.
  Plane nearest_plane;
  Vector nearest_point;
  /// Every plane attaining the distance, ascending.
  std::vector<Plane> tight_planes;
};

struct InnerFamilyMember {
  Rational mu;
  Matrix matrix;
};

struct InteriorResult {
  bool interior = false;
  /// max over finite off-diagonal (i, j) of A_ij + y_j - y_i; bottom when
  /// A has no finite off-diagonal entry.
  Scalar mu;
};

/// A with its zero diagonal replaced by bottom. Throws NotDefinite.
Matrix tilde(const Matrix& a);

/// True iff mu is a valid shift: lambda(tilde A) <= mu < 0, or any mu < 0
/// when tilde A is acyclic.
bool shift_in_range(const Matrix& a, const Rational& mu);

/// A_mu: off-diagonal A_ij - mu, zero diagonal. Throws NotDefinite,
/// ShiftOutOfRange.
InnerFamilyMember shifted_definite(const Matrix& a, const Rational& mu);

/// max_i (x_i - y_i) + max_j (y_j - x_j) on a common support; +inf when
/// the supports differ.
Distance hilbert_distance(const Vector& x, const Vector& y);

/// max - min over the support. Throws ZeroVector.
Rational range_seminorm(const Vector& x);

/// Largest point of X_ij not above y: y with y_i replaced by A_ij + y_j.
/// Throws NotDefinite, PlaneUndefined, InvalidInput.
Vector nearest_on_plane(const Matrix& a, std::size_t i, std::size_t j, const Vector& y);

/// y_i - y_j - A_ij. Throws as nearest_on_plane.
Rational dist_to_plane(const Matrix& a, std::size_t i, std::size_t j, const Vector& y);

/// Minimum plane distance over all finite off-diagonal entries. Throws
/// NotDefinite, InvalidInput, NotEigenvector, NoBoundary.
BoundaryDistance dist_to_boundary(const Matrix& a, const Vector& y);

/// The same minimum without the definiteness and eigenvector checks; the
/// value may be negative when y lies outside eig(A).
Rational dist_to_boundary_unchecked(const Matrix& a, const Vector& y);

/// Throws NotDefinite, InvalidInput, NotEigenvector.
InteriorResult interior_membership(const Matrix& a, const Vector& y);

/// -lambda(tilde A), or +inf when tilde A is acyclic. Throws NotDefinite,
/// NoBoundary.
Distance inscribed_radius(const Matrix& a);

/// dist_to_boundary(A, y) == -mu. Cross-checks the answer against boundary
/// membership in eig(A_mu) (std::logic_error on disagreement). Throws
/// ShiftOutOfRange, NotEigenvector.
bool level_set_check(const Matrix& a, const Rational& mu, const Vector& y);

/// D_ij = -d + x_i - x_j off the diagonal, zero diagonal; eig(D) is the
/// closed Hilbert ball of radius d around x. Throws InvalidInput.
Matrix hilbert_ball_matrix(const Vector& center, const Rational& radius);

}  // namespace maxplus
