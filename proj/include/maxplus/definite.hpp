#pragma once

// Definite matrices (zero diagonal, maximal cycle mean 0), definite forms
// of matrices with finite permanent, and eigenspaces of definite matrices.

#include <cstddef>
#include <vector>

#include "maxplus/assignment.hpp"
#include "maxplus/matrix.hpp"

namespace maxplus {

struct DefiniteForm {
  Matrix matrix;
  Permutation source_permutation;
};

/// Which basis vector a column of A* is a multiple of:
/// A*_{.j} = scale (x) vectors[basis_index].
struct ColumnClass {
  std::size_t basis_index = 0;
  Rational scale;
};

struct EigenBasis {
  /// Normalized (last finite coordinate 0), pairwise non-proportional.
  std::vector<Vector> vectors;
  /// One entry per column of A*.
  std::vector<ColumnClass> class_map;
};

bool is_definite(const Matrix& a);
void require_definite(const Matrix& a, const char* what);

/// A'(i, j) = A(i, sigma(j)) - A(j, sigma(j)).
/// Throws ZeroWeight or NotMaximalPermutation.
DefiniteForm definite_form(const Matrix& a, const Permutation& sigma);

/// One form per maximal permutation, in the order of permanent().
/// Throws ZeroPermanent.
std::vector<DefiniteForm> definite_forms(const Matrix& a);

/// Star of the definite form of the first maximal permutation. The result
/// does not depend on that choice; with `verify_all_forms` every form is
/// computed and compared (std::logic_error on disagreement). Throws
/// ZeroPermanent.
Matrix definite_closure(const Matrix& a, bool verify_all_forms = false);

/// A (x) x = x. Throws ZeroVector on the zero vector.
bool eig_membership(const Matrix& a, const Vector& x);

/// One normalized column of A* per proportionality class, taking the
/// smallest column index of each class. Throws NotDefinite.
EigenBasis eigenspace_basis(const Matrix& a);

inline constexpr std::size_t kMaxSupportDimension = 24;

/// All nonempty K such that A(i, j) is bottom whenever i is outside K and
/// j is in K, K = N included. Sorted by size, then lexicographically.
/// Throws NotDefinite, SizeLimitExceeded (n > 24).
std::vector<std::vector<std::size_t>> admissible_supports(const Matrix& a);

/// Eigenvector with support exactly K: the sum of the normalized columns
/// of (A_KK)*, embedded with bottom outside K, then normalized.
/// Throws NotDefinite, InadmissibleSupport.
Vector eigenvector_with_support(const Matrix& a, const std::vector<std::size_t>& support);

}  // namespace maxplus
