#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "maxplus/definite.hpp"
#include "maxplus/error.hpp"
#include "maxplus/path_algebra.hpp"
#include "support/oracles.hpp"

using namespace maxplus;
using oracle::kBot;

namespace {

const Matrix kA{{1, 3, 0}, {2, 0, 0}, {0, -1, -5}};
const Matrix kB{{2, 0, 2}, {1, 1, 3}, {0, -3, -2}};
const Matrix kFormA{{0, 0, 1}, {-3, 0, 2}, {-4, -5, 0}};
const Matrix kCellP{{0, -1, 6}, {kBot, 0, 5}, {kBot, -8, 0}};
const Matrix kCellW{{0, 3, 6}, {3, 0, 5}, {-1, -1, 0}};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kInvalidInput;
}

bool same_set(std::vector<Vector> a, std::vector<Vector> b) {
  auto less = [](const Vector& x, const Vector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

Matrix random_definite(oracle::Rng& rng, std::size_t n, int bottom_percent) {
  Matrix a = rng.matrix(n, n, -9, 9, bottom_percent);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = Scalar(rng.uniform(-9, 9));
  return definite_form(a, first_maximal_permutation(a)).matrix;
}

}  // namespace

TEST_CASE("definiteness") {
  CHECK(is_definite(kFormA));
  CHECK(is_definite(identity_matrix(3)));
  CHECK_FALSE(is_definite(kCellW));
  CHECK_FALSE(is_definite(kA));
  CHECK(kind_of([] { require_definite(kCellW, "test"); }) == ErrorKind::kNotDefinite);
}

TEST_CASE("definite form of a matrix with bottom entries") {
  const Matrix a{{1, 5, kBot}, {2, 1, 7}, {6, kBot, 2}};
  const DefiniteForm f = definite_form(a, Permutation({1, 2, 0}));
  CHECK(f.matrix == Matrix{{0, kBot, -5}, {-4, 0, -4}, {kBot, -5, 0}});
  CHECK(f.source_permutation == Permutation({1, 2, 0}));
}

TEST_CASE("both definite forms of a matrix with two maximal permutations") {
  const Matrix b1 = definite_form(kB, Permutation({2, 1, 0})).matrix;
  const Matrix b2 = definite_form(kB, Permutation({1, 2, 0})).matrix;
  CHECK(b1 == Matrix{{0, -1, 2}, {1, 0, 1}, {-4, -4, 0}});
  CHECK(b2 == Matrix{{0, -1, 2}, {1, 0, 1}, {-3, -5, 0}});
  CHECK(kleene_star(b1) == kleene_star(b2));
  CHECK(definite_form(kA, Permutation({1, 2, 0})).matrix == kFormA);
}

TEST_CASE("definite form errors") {
  const Matrix a{{1, 5, kBot}, {2, 1, 7}, {6, kBot, 2}};
  CHECK(kind_of([&] { definite_form(a, Permutation({2, 1, 0})); }) == ErrorKind::kZeroWeight);
  CHECK(kind_of([&] { definite_form(kA, Permutation::identity(3)); }) ==
        ErrorKind::kNotMaximalPermutation);
  CHECK(kind_of([] { definite_forms(Matrix{{1, 2}, {kBot, kBot}}); }) ==
        ErrorKind::kZeroPermanent);
}

TEST_CASE("definite forms follow the maximal permutations") {
  CHECK(definite_forms(kB).size() == 2);
  CHECK(definite_forms(kA).size() == 1);
  CHECK(definite_forms(identity_matrix(3)).size() == 1);
  CHECK(definite_forms(identity_matrix(3))[0].matrix == identity_matrix(3));
}

TEST_CASE("definite closure") {
  CHECK(definite_closure(kA) == Matrix{{0, 0, 2}, {-2, 0, 2}, {-4, -4, 0}});
  CHECK(definite_closure(kB, true) == Matrix{{0, -1, 2}, {1, 0, 3}, {-3, -4, 0}});
  CHECK(kind_of([] { definite_closure(Matrix{{kBot, kBot}, {kBot, kBot}}); }) ==
        ErrorKind::kZeroPermanent);
}

TEST_CASE("eigenvector membership") {
  const Matrix s = kleene_star(kFormA);
  CHECK(eig_membership(kFormA, s.column(0)));
  CHECK_FALSE(eig_membership(kFormA, Vector{0, 0, 0}));
  CHECK(eig_membership(kCellP, Vector{0, kBot, kBot}));
  CHECK(kind_of([] { eig_membership(kFormA, Vector(3)); }) == ErrorKind::kZeroVector);
}

TEST_CASE("eigenspace bases") {
  const Matrix vs{{0, -1, 3}, {0, 0, 4}, {-4, -5, 0}};
  CHECK(same_set(eigenspace_basis(vs).vectors, {Vector{4, 4, 0}, Vector{4, 5, 0}, Vector{3, 4, 0}}));

  const Matrix vu{{0, 1, 4}, {-1, 0, 3}, {-5, -4, 0}};
  const EigenBasis bu = eigenspace_basis(vu);
  CHECK(same_set(bu.vectors, {Vector{5, 4, 0}, Vector{4, 3, 0}}));
  REQUIRE(bu.class_map.size() == 3);
  CHECK(bu.class_map[0].basis_index == bu.class_map[1].basis_index);

  CHECK(same_set(eigenspace_basis(kFormA).vectors,
                 {Vector{4, 2, 0}, Vector{4, 4, 0}, Vector{2, 2, 0}}));
  CHECK(kind_of([] { eigenspace_basis(kCellW); }) == ErrorKind::kNotDefinite);
}

TEST_CASE("admissible supports") {
  CHECK(admissible_supports(kFormA) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(admissible_supports(kCellP) == std::vector<std::vector<std::size_t>>{{0}, {0, 1, 2}});
  CHECK(admissible_supports(identity_matrix(2)) ==
        std::vector<std::vector<std::size_t>>{{0}, {1}, {0, 1}});
  CHECK(kind_of([] { admissible_supports(identity_matrix(25)); }) ==
        ErrorKind::kSizeLimitExceeded);
}

TEST_CASE("eigenvectors with a prescribed support") {
  CHECK(eigenvector_with_support(kFormA, {0, 1, 2}) == Vector{4, 4, 0});
  CHECK(eigenvector_with_support(kCellP, {0}) == Vector{0, kBot, kBot});
  CHECK(kind_of([] { eigenvector_with_support(kCellP, {1}); }) ==
        ErrorKind::kInadmissibleSupport);
}

TEST_CASE("random: definite forms are definite and share one star") {
  oracle::Rng rng(41);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    const Matrix a = rng.matrix(n, n, -3, 3, rng.chance(30) ? 30 : 0);
    if (permanent_value(a).is_bottom()) continue;
    const auto forms = definite_forms(a);
    for (const auto& f : forms) {
      CHECK(is_definite(f.matrix));
      CHECK(kleene_star(f.matrix) == kleene_star(forms.front().matrix));
    }
  }
}

TEST_CASE("random: the form is the column-scaled permuted matrix") {
  oracle::Rng rng(42);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    const Matrix a = rng.matrix(n, n, -9, 9, 20);
    if (permanent_value(a).is_bottom()) continue;
    const Permutation s = first_maximal_permutation(a);
    const Matrix f = definite_form(a, s).matrix;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& e = a(i, s(j));
        if (e.is_bottom()) {
          CHECK(f(i, j).is_bottom());
        } else {
          CHECK(f(i, j) == Scalar(Rational(e.value() - a(j, s(j)).value())));
        }
      }
  }
}

TEST_CASE("random: star columns are eigenvectors and the basis generates them") {
  oracle::Rng rng(43);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    const Matrix d = random_definite(rng, n, 25);
    const Matrix s = kleene_star(d);
    const EigenBasis basis = eigenspace_basis(s);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(eig_membership(d, s.column(j)));
      const ColumnClass& c = basis.class_map[j];
      CHECK(scale(Scalar(c.scale), basis.vectors[c.basis_index]) == s.column(j));
    }
    for (std::size_t a = 0; a < basis.vectors.size(); ++a)
      for (std::size_t b = a + 1; b < basis.vectors.size(); ++b)
        CHECK_FALSE(is_proportional(basis.vectors[a], basis.vectors[b]).has_value());
    const Vector x = oracle::random_combination(rng, s);
    CHECK(eig_membership(d, x));
    CHECK(eig_membership(s, x));
  }
}

TEST_CASE("random: eigenvectors exist exactly on admissible supports") {
  oracle::Rng rng(44);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
    const Matrix d = random_definite(rng, n, 50);
    const auto supports = admissible_supports(d);
    const Matrix star = kleene_star(d);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(supports.back() == all);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> k;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) k.push_back(i);
      const bool admissible = std::find(supports.begin(), supports.end(), k) != supports.end();
      std::vector<bool> reach(n, false);
      for (std::size_t j : k)
        for (std::size_t i = 0; i < n; ++i)
          if (star(i, j).is_finite()) reach[i] = true;
      bool closed = true;
      for (std::size_t i = 0; i < n; ++i) closed = closed && reach[i] == bool(mask >> i & 1);
      CHECK(admissible == closed);
      if (admissible) {
        const Vector x = eigenvector_with_support(d, k);
        CHECK(x.support() == k);
        CHECK(eig_membership(d, x));
      } else {
        CHECK_THROWS_AS(eigenvector_with_support(d, k), Error);
      }
    }
  }
}

TEST_CASE("random: the closure does not depend on column scaling or column order") {
  oracle::Rng rng(45);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
    const Matrix a = rng.matrix(n, n, -9, 9);
    Matrix b = a;
    std::vector<long> col(n);
    for (auto& c : col) c = rng.uniform(-5, 5);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = otimes(a(i, j), Scalar(col[j]));
    CHECK(definite_closure(a) == definite_closure(b));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), std::mt19937_64(static_cast<unsigned long>(t)));
    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = a(i, order[j]);
    CHECK(definite_closure(a) == definite_closure(c));
  }
}
