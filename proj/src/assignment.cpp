#include "maxplus/assignment.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "maxplus/error.hpp"

namespace maxplus {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (std::size_t v : image_) {
    if (v >= image_.size() || hit[v])
      fail(ErrorKind::kInvalidInput, "not a permutation");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(
    std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (c[t] >= n || used[c[t]])
        fail(ErrorKind::kInvalidInput, "cycles are not disjoint or out of range");
      used[c[t]] = 1;
      image[c[t]] = c[(t + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Scalar permutation_weight(const Matrix& a, const Permutation& sigma) {
  require_square(a, "permutation_weight");
  if (sigma.size() != a.rows())
    fail(ErrorKind::kDimensionMismatch, "permutation size differs from matrix");
  Scalar w = Scalar::unit();
  for (std::size_t i = 0; i < a.rows(); ++i) w = otimes(w, a(i, sigma(i)));
  return w;
}

namespace {

// Optimal assignment with its dual certificate. Costs are -A(i, j); bottom
// entries get a penalty large enough that any assignment avoiding them is
// cheaper than any assignment using one.
struct Assignment {
  std::vector<std::size_t> row_to_col;
  std::vector<Rational> row_potential;
  std::vector<Rational> col_potential;
  std::vector<std::vector<Rational>> cost;
  bool finite = false;
};

Assignment solve_assignment(const Matrix& a) {
  require_square(a, "permanent");
  const std::size_t n = a.rows();
  Assignment out;
  if (n == 0) {
    out.finite = true;
    return out;
  }

  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite()) bound = std::max(bound, Rational(abs(a(i, j).value())));
  const Rational penalty = 2 * static_cast<long>(n) * bound + 1;

  out.cost.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.cost[i][j] = a(i, j).is_finite() ? Rational(-a(i, j).value()) : penalty;

  // Shortest augmenting path Hungarian method, 1-based with a virtual
  // column 0.
  std::vector<Rational> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = out.cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  out.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.row_to_col[p[j] - 1] = j - 1;
  out.row_potential.assign(u.begin() + 1, u.end());
  out.col_potential.assign(v.begin() + 1, v.end());
  out.finite = true;
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, out.row_to_col[i]).is_bottom()) out.finite = false;
  return out;
}

// Perfect matchings of the tight subgraph (zero reduced cost, finite
// entry), visited in lexicographic order of the image vector. Every such
// matching is an optimal assignment and conversely, by complementary
// slackness. Stops after `limit` matchings; returns false if more exist.
bool enumerate_tight(const Matrix& a, const Assignment& s, std::size_t limit,
                     std::vector<Permutation>& out) {
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> tight(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite() &&
          s.cost[i][j] - s.row_potential[i] - s.col_potential[j] == 0)
        tight[i].push_back(j);

  std::vector<char> col_used(n, 0);
  std::vector<std::size_t> image(n, 0);

  // Can rows [from, n) be matched into the unused columns?
  auto completable = [&](std::size_t from) {
    std::vector<long> match_col(n, -1);
    for (std::size_t r = from; r < n; ++r) {
      std::vector<char> seen(n, 0);
      std::function<bool(std::size_t)> augment = [&](std::size_t row) {
        for (std::size_t c : tight[row]) {
          if (col_used[c] || seen[c]) continue;
          seen[c] = 1;
          if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]))) {
            match_col[c] = static_cast<long>(row);
            return true;
          }
        }
        return false;
      };
      if (!augment(r)) return false;
    }
    return true;
  };

  bool complete = true;
  std::function<void(std::size_t)> extend = [&](std::size_t row) {
    if (!complete) return;
    if (row == n) {
      if (out.size() == limit) {
        complete = false;
        return;
      }
      out.emplace_back(image);
      return;
    }
    for (std::size_t c : tight[row]) {
      if (col_used[c]) continue;
      col_used[c] = 1;
      image[row] = c;
      if (completable(row + 1)) extend(row + 1);
      col_used[c] = 0;
      if (!complete) return;
    }
  };
  extend(0);
  return complete;
}

Scalar value_of(const Matrix& a, const Assignment& s) {
  if (!s.finite) return Scalar::bottom();
  return permutation_weight(a, Permutation(s.row_to_col));
}

}  // namespace

PermanentResult permanent(const Matrix& a, std::size_t cap) {
  const Assignment s = solve_assignment(a);
  PermanentResult result;
  result.value = value_of(a, s);
  if (result.value.is_bottom()) return result;
  if (!enumerate_tight(a, s, cap, result.maximal_permutations))
    fail(ErrorKind::kEnumerationOverflow,
         "more than " + std::to_string(cap) + " maximal permutations");
  result.strong = result.maximal_permutations.size() == 1;
  return result;
}

Scalar permanent_value(const Matrix& a) { return value_of(a, solve_assignment(a)); }

Permutation first_maximal_permutation(const Matrix& a) {
  const Assignment s = solve_assignment(a);
  if (!s.finite) fail(ErrorKind::kZeroPermanent, "permanent is bottom");
  std::vector<Permutation> found;
  enumerate_tight(a, s, 1, found);
  return found.front();
}

bool has_strong_permanent(const Matrix& a) {
  const Assignment s = solve_assignment(a);
  if (!s.finite) fail(ErrorKind::kZeroPermanent, "permanent is bottom");
  std::vector<Permutation> found;
  return enumerate_tight(a, s, 1, found);
}

}  // namespace maxplus
