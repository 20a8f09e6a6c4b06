#include "maxplus/polytrope.hpp"

#include <algorithm>
#include <string>

#include "maxplus/definite.hpp"
#include "maxplus/error.hpp"
#include "maxplus/path_algebra.hpp"

namespace maxplus {

void InequalitySystem::add(std::size_t i, std::size_t j, const Rational& bound) {
  if (i == j || i >= n_ || j >= n_)
    fail(ErrorKind::kInvalidInput, "constraint needs distinct indices in range");
  auto pos = std::lower_bound(
      constraints_.begin(), constraints_.end(), std::pair(i, j),
      [](const Constraint& c, const std::pair<std::size_t, std::size_t>& key) {
        return std::pair(c.i, c.j) < key;
      });
  if (pos != constraints_.end() && pos->i == i && pos->j == j)
    fail(ErrorKind::kInvalidInput, "at most one constraint per ordered pair");
  Rational b = bound;
  b.canonicalize();
  constraints_.insert(pos, Constraint{i, j, b});
}

bool InequalitySystem::satisfied_by(const Vector& x) const {
  if (x.size() != n_) fail(ErrorKind::kDimensionMismatch, "vector length differs");
  for (const auto& c : constraints_) {
    if (x[c.i].is_bottom() || x[c.j].is_bottom()) return false;
    if (x[c.i].value() - x[c.j].value() < c.bound) return false;
  }
  return true;
}

InequalitySystem reduced_system(const Matrix& a) {
  require_definite(a, "reduced_system");
  const Matrix star = kleene_star(a);
  InequalitySystem system(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j).is_finite() && a(i, j) == star(i, j))
        system.add(i, j, a(i, j).value());
  return system;
}

Matrix system_matrix(const InequalitySystem& system) {
  Matrix a = identity_matrix(system.dimension());
  for (const auto& c : system.constraints()) a(c.i, c.j) = c.bound;
  return a;
}

bool system_feasible(const InequalitySystem& system) {
  return is_definite(system_matrix(system));
}

void require_column_configuration(const Matrix& v) {
  if (v.rows() == 0 || v.cols() == 0)
    fail(ErrorKind::kInvalidInput, "empty configuration");
  for (std::size_t i = 0; i < v.cols(); ++i)
    if (v.column(i).is_zero())
      fail(ErrorKind::kInvalidInput,
           "column " + std::to_string(i + 1) + " has no finite entry");
}

namespace {

void require_full_point(const Matrix& v, const Vector& y) {
  if (y.size() != v.rows())
    fail(ErrorKind::kInvalidInput, "point length differs from row count");
  if (!y.has_full_support())
    fail(ErrorKind::kInvalidInput, "point must have full support");
}

void require_type_shape(const Matrix& v, const CombinatorialType& s) {
  if (s.sets.size() != v.rows())
    fail(ErrorKind::kInvalidInput, "type needs one set per row of V");
  for (const auto& set : s.sets)
    for (std::size_t i : set)
      if (i >= v.cols()) fail(ErrorKind::kInvalidInput, "type index out of range");
}

}  // namespace

CombinatorialType combinatorial_type(const Matrix& v, const Vector& y) {
  require_column_configuration(v);
  require_full_point(v, y);
  CombinatorialType t;
  t.sets.resize(v.rows());
  for (std::size_t i = 0; i < v.cols(); ++i) {
    Scalar best;
    for (std::size_t k = 0; k < v.rows(); ++k) best = oplus(best, divide(v(k, i), y[k]));
    for (std::size_t j = 0; j < v.rows(); ++j)
      if (divide(v(j, i), y[j]) == best) t.sets[j].push_back(i);
  }
  return t;
}

Matrix cell_matrix(const Matrix& v, const CombinatorialType& s) {
  require_column_configuration(v);
  require_type_shape(v, s);
  const std::size_t m = v.rows();
  Matrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (s.sets[j].empty()) {
      out(j, j) = Scalar::unit();
      continue;
    }
    for (std::size_t i : s.sets[j]) {
      if (v(j, i).is_bottom())
        fail(ErrorKind::kInvalidInput, "type selects a bottom entry of V");
      for (std::size_t r = 0; r < m; ++r)
        out(r, j) = oplus(out(r, j), divide(v(r, i), v(j, i)));
    }
  }
  return out;
}

bool cell_exists(const Matrix& v, const CombinatorialType& s) {
  const CycleMeanResult cm = max_cycle_mean(cell_matrix(v, s));
  return cm.lambda <= Scalar::unit();
}

CellGenerators cell_generators(const Matrix& v, const CombinatorialType& s) {
  const Matrix cell = cell_matrix(v, s);
  if (max_cycle_mean(cell).lambda > Scalar::unit())
    fail(ErrorKind::kEmptyCell, "cell is empty");
  const Matrix star = kleene_star(cell);
  CellGenerators out;
  for (std::size_t j = 0; j < star.cols(); ++j) {
    Vector col = normalized(star.column(j));
    auto& bucket = col.has_full_support() ? out.generators : out.excluded;
    if (std::find(bucket.begin(), bucket.end(), col) == bucket.end())
      bucket.push_back(std::move(col));
  }
  return out;
}

bool cell_membership(const Matrix& v, const CombinatorialType& s, const Vector& y) {
  require_column_configuration(v);
  require_type_shape(v, s);
  require_full_point(v, y);
  for (std::size_t j = 0; j < v.rows(); ++j)
    for (std::size_t i : s.sets[j]) {
      if (v(j, i).is_bottom())
        fail(ErrorKind::kInvalidInput, "type selects a bottom entry of V");
      for (std::size_t k = 0; k < v.rows(); ++k) {
        if (v(k, i).is_bottom()) continue;
        if (v(k, i).value() - v(j, i).value() > y[k].value() - y[j].value())
          return false;
      }
    }
  return true;
}

bool cell_membership_by_type(const Matrix& v, const CombinatorialType& s,
                             const Vector& y) {
  require_type_shape(v, s);
  const CombinatorialType t = combinatorial_type(v, y);
  for (std::size_t j = 0; j < v.rows(); ++j)
    for (std::size_t i : s.sets[j])
      if (std::find(t.sets[j].begin(), t.sets[j].end(), i) == t.sets[j].end())
        return false;
  return true;
}

bool span_membership(const Matrix& v, const Vector& y) {
  require_column_configuration(v);
  require_full_point(v, y);
  Vector z(v.cols());
  for (std::size_t i = 0; i < v.cols(); ++i) {
    std::optional<Rational> least;
    for (std::size_t k = 0; k < v.rows(); ++k) {
      if (v(k, i).is_bottom()) continue;
      Rational r = y[k].value() - v(k, i).value();
      if (!least || r < *least) least = r;
    }
    z[i] = *least;
  }
  return mat_vec(v, z) == y;
}

std::vector<CombinatorialType> full_types(std::size_t m, std::size_t n,
                                          std::size_t budget) {
  if (n == 0 || n >= 63) fail(ErrorKind::kBudgetExceeded, "too many columns");
  const unsigned long long per_row = (1ULL << n) - 1;
  if (per_row > budget) fail(ErrorKind::kBudgetExceeded, "type enumeration exceeds budget");
  unsigned long long total = 1;
  for (std::size_t r = 0; r < m; ++r) {
    total *= per_row;
    if (total > budget) fail(ErrorKind::kBudgetExceeded, "type enumeration exceeds budget");
  }

  std::vector<CombinatorialType> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<unsigned long long> mask(m, 1);
  for (;;) {
    CombinatorialType t;
    t.sets.resize(m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < n; ++i)
        if (mask[r] >> i & 1ULL) t.sets[r].push_back(i);
    out.push_back(std::move(t));
    std::size_t r = m;
    while (r > 0 && mask[r - 1] == per_row) mask[--r] = 1;
    if (r == 0) break;
    ++mask[r - 1];
  }
  return out;
}

}  // namespace maxplus
