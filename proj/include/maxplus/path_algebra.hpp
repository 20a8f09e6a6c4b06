#pragma once

// Optimal-path algorithms on the weighted digraph of a square matrix:
// edge i -> j exists iff A(i, j) is finite and carries weight A(i, j).

#include <cstddef>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

struct CycleMeanResult {
  /// Bottom iff the digraph is acyclic.
  Scalar lambda;
  /// 0-based nodes of a cycle with mean lambda, starting at its smallest
  /// node; the lexicographically least such sequence. Empty iff bottom.
  std::vector<std::size_t> witness_cycle;
};

/// Maximal cycle mean, computed exactly with Karp's recurrence on each
/// strongly connected component.
CycleMeanResult max_cycle_mean(const Matrix& a);

/// Mean weight of a node cycle (i0 -> i1 -> ... -> i0).
Scalar cycle_mean(const Matrix& a, const std::vector<std::size_t>& cycle);

/// A* = I (+) A (+) A^2 (+) ... Throws CycleMeanPositiveError if the
/// maximal cycle mean is positive.
Matrix kleene_star(const Matrix& a);

/// A+ = A (x) A*. Same precondition as kleene_star.
Matrix plus_closure(const Matrix& a);

/// Edges (i, j) lying on some cycle of maximal mean. Empty when acyclic.
std::vector<std::pair<std::size_t, std::size_t>> critical_edges(const Matrix& a);

/// Nodes on a zero-weight cycle. Requires lambda(A) = 0 (NotNormalized).
std::vector<std::size_t> critical_nodes(const Matrix& a);

/// Critical nodes grouped by A*_ij (x) A*_ji = 0; classes ordered by their
/// smallest member. Requires lambda(A) = 0 (NotNormalized).
std::vector<std::vector<std::size_t>> critical_classes(const Matrix& a);

/// Strongly connected components of the finite-entry digraph, each sorted,
/// listed in topological order (a component precedes its successors).
std::vector<std::vector<std::size_t>> strong_components(const Matrix& a);

}  // namespace maxplus
