#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxplus/error.hpp"
#include "maxplus/matrix.hpp"
#include "support/oracles.hpp"

using namespace maxplus;
using oracle::kBot;
using oracle::q;

TEST_CASE("scalar addition is max with bottom neutral") {
  CHECK(oplus(3, 5) == Scalar(5));
  CHECK(oplus(kBot, 7) == Scalar(7));
  CHECK(oplus(4, 4) == Scalar(4));
  CHECK(oplus(kBot, kBot).is_bottom());
}

TEST_CASE("scalar multiplication is addition with bottom absorbing") {
  CHECK(otimes(2, 3) == Scalar(5));
  CHECK(otimes(kBot, 9).is_bottom());
  CHECK(otimes(-4, 4) == Scalar::unit());
}

TEST_CASE("rational powers scale the value") {
  CHECK(power(6, make_rational(1, 2)) == Scalar(3));
  CHECK(power(5, 3) == Scalar(15));
  CHECK(power(kBot, make_rational(1, 3)).is_bottom());
  CHECK(power(1, make_rational(1, 3)) == q(1, 3));
}

TEST_CASE("inverse and division") {
  CHECK(inverse(q(3, 2)) == q(-3, 2));
  CHECK_THROWS_AS(inverse(kBot), std::domain_error);
  CHECK(divide(5, 2) == Scalar(3));
  CHECK(divide(kBot, 2).is_bottom());
  CHECK_THROWS_AS(divide(1, kBot), std::domain_error);
}

TEST_CASE("bottom is the least scalar and rationals are canonical") {
  CHECK(kBot < Scalar(-1000000));
  CHECK(Scalar(make_rational(4, 2)) == Scalar(2));
  CHECK(make_rational(-6, 4) == make_rational(3, -2));
  CHECK_THROWS_AS(kBot.value(), std::logic_error);
}

TEST_CASE("matrix addition") {
  const Matrix a{{0, 1}, {2, 3}};
  const Matrix b{{4, 0}, {1, 5}};
  CHECK(mat_add(a, b) == Matrix{{4, 1}, {2, 5}});
  CHECK(mat_add(a, a) == a);
  CHECK(mat_add(a, Matrix(2, 2)) == a);
  CHECK_THROWS_AS(mat_add(a, Matrix(2, 3)), Error);
}

TEST_CASE("matrix multiplication") {
  const Matrix a{{0, 0, 2}, {-2, 0, 2}, {-4, -4, 0}};
  CHECK(mat_mul(identity_matrix(3), a) == a);
  CHECK(mat_mul(a, identity_matrix(3)) == a);
  CHECK(mat_mul(Matrix{{0, 0, 1}}, Matrix{{1}, {2}, {0}}) == Matrix{{2}});
  CHECK(mat_mul(a, a) == a);
  try {
    mat_mul(a, Matrix(2, 2));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDimensionMismatch);
  }
}

TEST_CASE("matrix-vector product") {
  const Vector x{4, 4, 0};
  CHECK(mat_vec(identity_matrix(3), x) == x);
  CHECK(mat_vec(Matrix(3, 3), x).is_zero());
  const Matrix ap{{0, 0, 1}, {-3, 0, 2}, {-4, -5, 0}};
  CHECK(mat_vec(ap, x) == x);
  CHECK(mat_vec(ap, Vector{0, 0, 0}) == Vector{1, 2, 0});
  CHECK_THROWS_AS(mat_vec(ap, Vector{0, 0}), Error);
}

TEST_CASE("identity matrix") {
  CHECK(identity_matrix(1) == Matrix{{0}});
  CHECK(identity_matrix(2) == Matrix{{0, kBot}, {kBot, 0}});
  CHECK(mat_mul(identity_matrix(4), identity_matrix(4)) == identity_matrix(4));
}

TEST_CASE("matrix powers") {
  const Matrix ap{{0, 0, 1}, {-3, 0, 2}, {-4, -5, 0}};
  CHECK(mat_pow(ap, 0) == identity_matrix(3));
  CHECK(mat_pow(ap, 1) == ap);
  CHECK(mat_pow(ap, 2) == oracle::naive_mul(ap, ap));
  CHECK(mat_pow(ap, 5) == oracle::naive_mul(oracle::naive_mul(mat_pow(ap, 2), mat_pow(ap, 2)), ap));
}

TEST_CASE("proportionality") {
  CHECK(is_proportional(Vector{0, -2, -4}, Vector{4, 2, 0}) == Scalar(-4));
  CHECK_FALSE(is_proportional(Vector{0, 0, -4}, Vector{0, -2, -4}).has_value());
  CHECK(is_proportional(Vector{1, kBot, 3}, Vector{1, kBot, 3}) == Scalar(0));
  CHECK_FALSE(is_proportional(Vector{1, kBot}, Vector{1, 2}).has_value());
}

TEST_CASE("invertibility is a permutation pattern") {
  CHECK(is_invertible(identity_matrix(3)));
  CHECK_FALSE(is_invertible(Matrix{{1, 2}, {3, 4}}));
  CHECK(is_invertible(Matrix{{kBot, 5}, {2, kBot}}));
  CHECK_FALSE(is_invertible(Matrix{{kBot, 5}, {kBot, 2}}));
}

TEST_CASE("vectors: support and normalization") {
  const Vector v{3, kBot, 1};
  CHECK(v.support() == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(v.has_full_support());
  CHECK(normalized(v) == Vector{2, kBot, 0});
  CHECK(normalized(Vector{0, -2, -4}) == Vector{4, 2, 0});
  CHECK(normalized(Vector{0, kBot, kBot}) == Vector{0, kBot, kBot});
  CHECK_THROWS_AS(normalized(Vector(3)), Error);
}

TEST_CASE("ragged initializer lists are rejected") {
  CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), Error);
}

TEST_CASE("semiring laws on random scalars") {
  oracle::Rng rng(11);
  auto draw = [&] { return rng.chance(15) ? kBot : q(rng.uniform(-40, 40), rng.uniform(1, 6)); };
  for (int t = 0; t < 2000; ++t) {
    const Scalar a = draw(), b = draw(), c = draw();
    CHECK(oplus(a, oplus(b, c)) == oplus(oplus(a, b), c));
    CHECK(oplus(a, b) == oplus(b, a));
    CHECK(oplus(a, a) == a);
    CHECK(otimes(a, otimes(b, c)) == otimes(otimes(a, b), c));
    CHECK(otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c)));
    if (a.is_finite()) CHECK(otimes(a, inverse(a)) == Scalar::unit());
  }
}

TEST_CASE("matrix product is associative with a two-sided identity") {
  oracle::Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const Matrix a = rng.matrix(4, 4, -9, 9, 20);
    const Matrix b = rng.matrix(4, 4, -9, 9, 20);
    const Matrix c = rng.matrix(4, 4, -9, 9, 20);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    CHECK(mat_mul(a, b) == oracle::naive_mul(a, b));
    CHECK(mat_mul(identity_matrix(4), a) == a);
    CHECK(mat_mul(a, identity_matrix(4)) == a);
  }
}

TEST_CASE("proportionality factors are mutually inverse") {
  oracle::Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const Vector y = rng.vector(4, -9, 9);
    const long c = rng.uniform(-5, 5);
    Vector x = rng.chance(50) ? scale(Scalar(c), y) : rng.vector(4, -9, 9);
    const auto xy = is_proportional(x, y);
    const auto yx = is_proportional(y, x);
    REQUIRE(xy.has_value() == yx.has_value());
    if (xy) CHECK(*xy == inverse(*yx));
  }
}
