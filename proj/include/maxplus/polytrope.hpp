#pragma once

// Inequality descriptions of definite eigenspaces and the cells X_S of the
// cellular decomposition induced by a column configuration V (m x n).

#include <cstddef>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// bound <= x_i - x_j.
struct Constraint {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational bound;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t n) : n_(n) {}

  /// Throws InvalidInput for i == j, indices out of range, or a second
  /// constraint on the same ordered pair.
  void add(std::size_t i, std::size_t j, const Rational& bound);

  std::size_t dimension() const { return n_; }
  /// Sorted by (i, j).
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool satisfied_by(const Vector& x) const;

  friend bool operator==(const InequalitySystem&, const InequalitySystem&) = default;

 private:
  std::size_t n_;
  std::vector<Constraint> constraints_;
};

/// S = (S_1, ..., S_m); S_j holds column indices of V, possibly empty.
struct CombinatorialType {
  std::vector<std::vector<std::size_t>> sets;

  friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;
};

/// Constraints at finite off-diagonal positions with A_ij = A*_ij.
/// Throws NotDefinite.
InequalitySystem reduced_system(const Matrix& a);

/// Zero diagonal, the bound at constrained positions, bottom elsewhere.
Matrix system_matrix(const InequalitySystem& system);

bool system_feasible(const InequalitySystem& system);

/// Throws InvalidInput if some column of V is entirely bottom.
void require_column_configuration(const Matrix& v);

/// i in S_j iff max_k (V_ki - y_k) = V_ji - y_j. y must have full support.
/// Throws InvalidInput.
CombinatorialType combinatorial_type(const Matrix& v, const Vector& y);

/// m x m matrix V^S: column j is (+)_{i in S_j} V_ji^{-1} V_{.i}, or the
/// unit column when S_j is empty. Throws InvalidInput.
Matrix cell_matrix(const Matrix& v, const CombinatorialType& s);

bool cell_exists(const Matrix& v, const CombinatorialType& s);

struct CellGenerators {
  /// Normalized full-support columns of (V^S)*, duplicates removed.
  std::vector<Vector> generators;
  /// Normalized columns of (V^S)* lacking full support.
  std::vector<Vector> excluded;
};

/// Throws EmptyCell.
CellGenerators cell_generators(const Matrix& v, const CombinatorialType& s);

/// Direct check of V_ki - V_ji <= y_k - y_j for all k and all i in S_j
/// (inequalities with V_ki bottom are vacuous).
bool cell_membership(const Matrix& v, const CombinatorialType& s, const Vector& y);

/// Same predicate via S_j being contained in the type of y.
bool cell_membership_by_type(const Matrix& v, const CombinatorialType& s,
                             const Vector& y);

/// y in span(V), by residuation: V (x) z = y for z_i = min_k (y_k - V_ki).
bool span_membership(const Matrix& v, const Vector& y);

/// All full types (every S_j nonempty) for an m x n configuration, in
/// lexicographic order of the subset bitmasks. Throws BudgetExceeded when
/// (2^n - 1)^m exceeds `budget`.
std::vector<CombinatorialType> full_types(std::size_t m, std::size_t n,
                                          std::size_t budget = 100000);

}  // namespace maxplus
