#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "maxplus/error.hpp"
#include "maxplus/io.hpp"
#include "support/oracles.hpp"

using namespace maxplus;
using oracle::kBot;
using oracle::q;

namespace {

std::pair<std::size_t, std::size_t> parse_error_at(std::string_view text) {
  try {
    io::parse_matrix(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no ParseError");
  return {0, 0};
}

}  // namespace

TEST_CASE("parse matrices") {
  CHECK(io::parse_matrix("0 -4 1\n1 0 1\n-5 -7 0").matrix ==
        Matrix{{0, -4, 1}, {1, 0, 1}, {-5, -7, 0}});
  CHECK(io::parse_matrix("0 -inf -5\n-4 0 -4\n-inf -5 0").matrix ==
        Matrix{{0, kBot, -5}, {-4, 0, -4}, {kBot, -5, 0}});
  CHECK(io::parse_matrix("0 2.5").matrix == Matrix{{0, q(5, 2)}});
  CHECK(io::parse_matrix("# header\n\n  1/3 * \n-2/4 +7  # tail\n").matrix ==
        Matrix{{q(1, 3), kBot}, {q(-1, 2), 7}});
  CHECK(io::parse_matrix("1 2\r\n3 4\r\n").matrix == Matrix{{1, 2}, {3, 4}});
  CHECK(io::parse_matrix("-0.125").matrix == Matrix{{q(-1, 8)}});
  CHECK(io::parse_matrix("1").name == "matrix");
  CHECK(io::parse_matrix("09 -08 0.09 010/08").matrix == Matrix{{9, -8, q(9, 100), q(5, 4)}});
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_at("1 2\n3 x") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(parse_error_at("1 2\n3") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(parse_error_at("1 2/0") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(parse_error_at("  1.5.2") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(parse_error_at("# nothing\n") == std::pair<std::size_t, std::size_t>{2, 1});
  try {
    io::parse_matrix("1 2\n3 x");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2, column 3: ", 0) == 0);
    CHECK(e.kind() == ErrorKind::kParseError);
  }
}

TEST_CASE("scalars and rationals") {
  CHECK(io::parse_scalar("-inf").is_bottom());
  CHECK(io::parse_scalar("*").is_bottom());
  CHECK(io::parse_scalar("3/6") == q(1, 2));
  CHECK(io::parse_rational("-1.5") == make_rational(-3, 2));
  CHECK_THROWS_AS(io::parse_rational("-inf"), ParseError);
  CHECK_THROWS_AS(io::parse_scalar(""), ParseError);
}

TEST_CASE("number formatting") {
  CHECK(io::format_rational(make_rational(-3, 2)) == "-1.5");
  CHECK(io::format_rational(make_rational(1, 3)) == "1/3");
  CHECK(io::format_rational(make_rational(-7, 40)) == "-0.175");
  CHECK(io::format_rational(Rational(12)) == "12");
  CHECK(io::format_rational(Rational(0)) == "0");
  CHECK(io::format_scalar(kBot) == "-inf");
  CHECK(io::format_distance(Distance::infinite()) == "inf");
  CHECK(io::format_distance(Distance(make_rational(3, 2))) == "1.5");
  CHECK(io::format_vector(Vector{0, q(5, 2), -3}) == "[0 2.5 -3]");
  CHECK(io::format_matrix(Matrix{{0, kBot}, {-12, q(1, 3)}}) == "  0  -inf\n-12   1/3\n");
}

TEST_CASE("serialization round-trips") {
  const Matrix a{{0, kBot, q(-5, 3)}, {q(7, 4), 0, -4}, {kBot, 100, 0}};
  CHECK(io::parse_matrix(io::serialize_matrix(a)).matrix == a);
  oracle::Rng rng(71);
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
    Matrix m = rng.matrix(r, c, -9, 9, 20);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (m(i, j).is_finite() && rng.chance(50))
          m(i, j) = Scalar(make_rational(rng.uniform(-50, 50), rng.uniform(1, 12)));
    CHECK(io::parse_matrix(io::serialize_matrix(m)).matrix == m);
    CHECK(io::parse_matrix(io::format_matrix(m)).matrix == m);
  }
}

TEST_CASE("golden data files round-trip") {
  for (const auto& entry : std::filesystem::directory_iterator(MAXPLUS_DATA_DIR)) {
    if (entry.path().extension() != ".mat") continue;
    const io::MatrixDocument doc = io::read_matrix_file(entry.path().string());
    CHECK(doc.name == entry.path().stem().string());
    CHECK(io::parse_matrix(io::serialize_matrix(doc.matrix)).matrix == doc.matrix);
  }
  CHECK(io::read_matrix_file(std::string(MAXPLUS_DATA_DIR) + "/B.mat").matrix ==
        Matrix{{2, 0, 2}, {1, 1, 3}, {0, -3, -2}});
  CHECK_THROWS_AS(io::read_matrix_file("/nonexistent/x.mat"), Error);
}

TEST_CASE("vectors") {
  CHECK(io::parse_vector("0,2.5,-3") == Vector{0, q(5, 2), -3});
  CHECK(io::parse_vector("[0 2.5 -3]") == Vector{0, q(5, 2), -3});
  CHECK(io::parse_vector(" 1 , -inf ") == Vector{1, kBot});
  CHECK_THROWS_AS(io::parse_vector("[]"), ParseError);
  CHECK_THROWS_AS(io::parse_vector("1,,2"), ParseError);
}

TEST_CASE("combinatorial types") {
  const CombinatorialType s = io::parse_type("{2,3};{4};{1}");
  CHECK(s == CombinatorialType{{{1, 2}, {3}, {0}}});
  CHECK(io::format_type(s) == "{2,3};{4};{1}");
  CHECK(io::parse_type("{};{4};{3,1,2,1}") == CombinatorialType{{{}, {3}, {0, 1, 2}}});
  CHECK(io::format_type(io::parse_type(" { } ; {4} ")) == "{};{4}");
  CHECK(io::format_index_set({0, 1, 2}) == "{1,2,3}");
  CHECK_THROWS_AS(io::parse_type("{0}"), ParseError);
  CHECK_THROWS_AS(io::parse_type("{1"), ParseError);
}

TEST_CASE("json values are exact strings") {
  CHECK(io::to_json(q(-3, 2)) == "-1.5");
  CHECK(io::to_json(kBot) == "-inf");
  CHECK(io::to_json(Vector{1, q(1, 3)}) == nlohmann::json::array({"1", "1/3"}));
  CHECK(io::to_json(Matrix{{0, kBot}}) == nlohmann::json::array({nlohmann::json::array({"0", "-inf"})}));
  CHECK(io::to_json(Distance::infinite()) == "inf");
}
