#include "maxplus/definite.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "maxplus/error.hpp"
#include "maxplus/path_algebra.hpp"

namespace maxplus {

bool is_definite(const Matrix& a) {
  require_square(a, "is_definite");
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, i) != Scalar::unit()) return false;
  return max_cycle_mean(a).lambda == Scalar::unit();
}

void require_definite(const Matrix& a, const char* what) {
  if (!is_definite(a))
    fail(ErrorKind::kNotDefinite, std::string(what) + ": matrix is not definite");
}

namespace {

Matrix form_matrix(const Matrix& a, const Permutation& sigma) {
  const std::size_t n = a.rows();
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar& pivot = a(j, sigma(j));
    for (std::size_t i = 0; i < n; ++i) out(i, j) = divide(a(i, sigma(j)), pivot);
  }
  return out;
}

}  // namespace

DefiniteForm definite_form(const Matrix& a, const Permutation& sigma) {
  const Scalar weight = permutation_weight(a, sigma);
  if (weight.is_bottom())
    fail(ErrorKind::kZeroWeight, "definite_form: permutation has bottom weight");
  if (weight != permanent_value(a))
    fail(ErrorKind::kNotMaximalPermutation,
         "definite_form: permutation is not maximal");
  return {form_matrix(a, sigma), sigma};
}

std::vector<DefiniteForm> definite_forms(const Matrix& a) {
  const PermanentResult per = permanent(a);
  if (per.value.is_bottom())
    fail(ErrorKind::kZeroPermanent, "definite_forms: permanent is bottom");
  std::vector<DefiniteForm> forms;
  forms.reserve(per.maximal_permutations.size());
  for (const auto& sigma : per.maximal_permutations)
    forms.push_back({form_matrix(a, sigma), sigma});
  return forms;
}

Matrix definite_closure(const Matrix& a, bool verify_all_forms) {
  const Permutation sigma = first_maximal_permutation(a);
  Matrix star = kleene_star(form_matrix(a, sigma));
  if (verify_all_forms) {
    for (const auto& form : definite_forms(a))
      if (kleene_star(form.matrix) != star)
        throw std::logic_error("definite forms have different closures");
  }
  return star;
}

bool eig_membership(const Matrix& a, const Vector& x) {
  require_square(a, "eig_membership");
  if (x.size() != a.rows())
    fail(ErrorKind::kDimensionMismatch, "eig_membership: vector length differs");
  if (x.is_zero()) fail(ErrorKind::kZeroVector, "eig_membership: zero vector");
  return mat_vec(a, x) == x;
}

EigenBasis eigenspace_basis(const Matrix& a) {
  require_definite(a, "eigenspace_basis");
  const Matrix star = kleene_star(a);
  const std::size_t n = a.rows();
  EigenBasis basis;
  basis.class_map.resize(n);
  std::vector<long> representative_of(n, -1);
  for (const auto& cls : critical_classes(a)) {
    const std::size_t rep = cls.front();
    const std::size_t index = basis.vectors.size();
    const Vector v = normalized(star.column(rep));
    for (std::size_t j : cls) {
      const std::optional<Scalar> alpha = is_proportional(star.column(j), v);
      if (!alpha) throw std::logic_error("critical class columns not proportional");
      basis.class_map[j] = {index, alpha->value()};
      representative_of[j] = static_cast<long>(rep);
    }
    basis.vectors.push_back(v);
  }
  // Definite matrices have every node critical (zero diagonal).
  for (std::size_t j = 0; j < n; ++j)
    if (representative_of[j] < 0) throw std::logic_error("uncovered column");
  return basis;
}

namespace {

bool closed_under_predecessors(const Matrix& a, const std::vector<char>& in) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!in[i] && in[j] && a(i, j).is_finite()) return false;
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> admissible_supports(const Matrix& a) {
  require_definite(a, "admissible_supports");
  const std::size_t n = a.rows();
  if (n > kMaxSupportDimension)
    fail(ErrorKind::kSizeLimitExceeded,
         "admissible_supports: dimension limited to " +
             std::to_string(kMaxSupportDimension));

  // Admissible supports are the predecessor-closed unions of strongly
  // connected components. Walk components in topological order; a
  // component may join only if every component with an edge into it did.
  const auto comps = strong_components(a);
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t v : comps[c]) comp_of[v] = c;
  std::vector<std::vector<std::size_t>> preds(comps.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite() && comp_of[i] != comp_of[j])
        preds[comp_of[j]].push_back(comp_of[i]);

  std::vector<std::vector<std::size_t>> out;
  std::vector<char> chosen(comps.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == comps.size()) {
      std::vector<std::size_t> k;
      for (std::size_t d = 0; d < comps.size(); ++d)
        if (chosen[d]) k.insert(k.end(), comps[d].begin(), comps[d].end());
      if (!k.empty()) {
        std::sort(k.begin(), k.end());
        out.push_back(std::move(k));
      }
      return;
    }
    walk(c + 1);
    bool allowed = true;
    for (std::size_t p : preds[c]) allowed = allowed && chosen[p];
    if (allowed) {
      chosen[c] = 1;
      walk(c + 1);
      chosen[c] = 0;
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

Vector eigenvector_with_support(const Matrix& a, const std::vector<std::size_t>& support) {
  require_definite(a, "eigenvector_with_support");
  const std::size_t n = a.rows();
  std::vector<char> in(n, 0);
  for (std::size_t k : support) {
    if (k >= n || in[k])
      fail(ErrorKind::kInadmissibleSupport, "support index out of range or repeated");
    in[k] = 1;
  }
  if (support.empty() || !closed_under_predecessors(a, in))
    fail(ErrorKind::kInadmissibleSupport,
         "a finite entry enters the support from outside");

  std::vector<std::size_t> k = support;
  std::sort(k.begin(), k.end());
  const Matrix sub_star = kleene_star(a.submatrix(k, k));
  Vector sum(k.size());
  for (std::size_t j = 0; j < k.size(); ++j)
    sum = vec_add(sum, normalized(sub_star.column(j)));
  Vector x(n);
  for (std::size_t t = 0; t < k.size(); ++t) x[k[t]] = sum[t];
  return normalized(x);
}

}  // namespace maxplus
