#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxplus/definite.hpp"
#include "maxplus/error.hpp"
#include "maxplus/hilbert.hpp"
#include "maxplus/path_algebra.hpp"
#include "maxplus/plot.hpp"
#include "maxplus/polytrope.hpp"
#include "support/oracles.hpp"

using namespace maxplus;
using namespace maxplus::plot;
using oracle::kBot;

namespace {

const Matrix kFormA{{0, 0, 1}, {-3, 0, 2}, {-4, -5, 0}};
const Matrix kFormB{{0, -1, 2}, {1, 0, 1}, {-4, -4, 0}};
const Matrix kV{{1, 4, 6, 7}, {4, 1, 5, 8}, {0, 0, 0, 0}};

Point2 pt(long u, long v) { return {Rational(u), Rational(v)}; }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = haystack.find(needle); at != std::string::npos; at = haystack.find(needle, at + 1)) ++n;
  return n;
}

Matrix random_definite3(oracle::Rng& rng, int bottom_percent) {
  Matrix a = rng.matrix(3, 3, -6, 6, bottom_percent);
  for (std::size_t i = 0; i < 3; ++i) a(i, i) = Scalar(rng.uniform(-6, 6));
  return definite_form(a, first_maximal_permutation(a)).matrix;
}

// Half-integer grid point lifted back to R^3 under the default projection.
Vector lift(long su, long sv) {
  return Vector{Scalar(make_rational(su, 2)), Scalar(make_rational(sv, 2)), Scalar(0)};
}

}  // namespace

TEST_CASE("projection") {
  CHECK(project(Vector{4, 5, 1}) == pt(3, 4));
  CHECK(project(Vector{4, 5, 1}, Projection{2, 0, 1}) == pt(-4, -1));
  CHECK_THROWS_AS(require_projection(Projection{0, 0, 1}), Error);
  CHECK_THROWS_AS(require_projection(Projection{0, 1, 3}), Error);
}

TEST_CASE("eigenspace with an interior is a triangle") {
  const PlotScene s = plot_eigenspace(kFormA);
  REQUIRE(s.polygons.size() == 1);
  CHECK(s.segments.empty());
  CHECK(s.polygons[0].vertices == std::vector<Point2>{pt(2, 2), pt(4, 2), pt(4, 4)});
  CHECK_FALSE(s.polygons[0].unbounded);
  CHECK(s.polygons[0].label == "eig");
}

TEST_CASE("eigenspace without an interior is a segment") {
  const PlotScene s = plot_eigenspace(kFormB);
  CHECK(s.polygons.empty());
  REQUIRE(s.segments.size() == 1);
  CHECK(s.segments[0].points == std::vector<Point2>{pt(2, 3), pt(3, 4)});
}

TEST_CASE("a Hilbert ball is a hexagon") {
  const PlotScene s = plot_eigenspace(hilbert_ball_matrix(Vector{5, 4, 0}, 3));
  REQUIRE(s.polygons.size() == 1);
  CHECK(s.polygons[0].vertices ==
        std::vector<Point2>{pt(2, 1), pt(5, 1), pt(8, 4), pt(8, 7), pt(5, 7), pt(2, 4)});
}

TEST_CASE("a single point eigenspace") {
  const Matrix d = shifted_definite(hilbert_ball_matrix(Vector{5, 4, 0}, 3), -3).matrix;
  const PlotScene s = plot_eigenspace(d);
  CHECK(s.polygons.empty());
  CHECK(s.segments.empty());
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].at == pt(5, 4));
}

TEST_CASE("unbounded eigenspaces are clipped and flagged") {
  const Matrix vp{{0, -1, 6}, {kBot, 0, 5}, {kBot, -8, 0}};
  const PlotScene s = plot_eigenspace(vp);
  REQUIRE(s.polygons.size() == 1);
  CHECK(s.polygons[0].unbounded);
  CHECK(scene_contains(s, pt(7, 8)));
  CHECK(scene_contains(s, pt(6, 5)));
}

TEST_CASE("eigenspace plotting errors") {
  CHECK_THROWS_AS(plot_eigenspace(identity_matrix(2)), Error);
  CHECK_THROWS_AS(plot_eigenspace(Matrix{{0, 3, 6}, {3, 0, 5}, {-1, -1, 0}}), Error);
}

TEST_CASE("span of one column is a point") {
  const PlotScene s = plot_span(Matrix{{3}, {1}, {0}});
  CHECK(s.polygons.empty());
  CHECK(s.segments.empty());
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].at == pt(3, 1));
  CHECK(s.points[0].label == "v1");
}

TEST_CASE("span of two columns is a tropical segment") {
  oracle::Rng rng(81);
  for (int t = 0; t < 100; ++t) {
    const Matrix v = rng.matrix(3, 2, -9, 9);
    if (is_proportional(v.column(0), v.column(1))) continue;
    const PlotScene s = plot_span(v);
    CHECK(s.polygons.empty());
    CHECK(s.segments.size() >= 1);
    CHECK(s.segments.size() <= 2);
    CHECK(scene_contains(s, project(v.column(0))));
    CHECK(scene_contains(s, project(v.column(1))));
  }
}

TEST_CASE("cell decomposition of the four-column configuration") {
  const std::vector<Highlight> hl{
      {"S", {{{1, 2}, {3}, {0}}}, "red"},
      {"U", {{{2}, {0, 2, 3}, {1}}}, "green"},
  };
  const PlotScene s = plot_span(kV, hl);
  std::size_t generators = 0;
  for (const auto& m : s.points)
    if (m.style == "generator") ++generators;
  CHECK(generators == 4);
  bool found_s = false, found_u = false;
  for (const auto& poly : s.polygons)
    if (poly.label == "S") {
      found_s = true;
      CHECK(poly.vertices == std::vector<Point2>{pt(3, 4), pt(4, 4), pt(4, 5)});
    }
  for (const auto& seg : s.segments)
    if (seg.label == "U") {
      found_u = true;
      CHECK(seg.points == std::vector<Point2>{pt(4, 3), pt(5, 4)});
    }
  CHECK(found_s);
  CHECK(found_u);
}

TEST_CASE("random: eigenspace pictures agree with eigenvector membership") {
  oracle::Rng rng(82);
  for (int t = 0; t < 60; ++t) {
    const bool finite = t % 2 == 0;
    const Matrix a = random_definite3(rng, finite ? 0 : 30);
    const PlotScene s = plot_eigenspace(a);
    const bool bounded = kleene_star(a).column(0).has_full_support() &&
                         kleene_star(a).column(1).has_full_support() &&
                         kleene_star(a).column(2).has_full_support();
    for (long su = -30; su <= 30; ++su)
      for (long sv = -30; sv <= 30; ++sv) {
        const Vector x = lift(su, sv);
        const bool drawn = scene_contains(s, project(x));
        const bool member = eig_membership(a, x);
        if (bounded)
          CHECK(drawn == member);
        else if (drawn)
          CHECK(member);
      }
  }
}

TEST_CASE("random: span pictures agree with span membership") {
  oracle::Rng rng(83);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const Matrix v = rng.matrix(3, n, -5, 5);
    const PlotScene s = plot_span(v);
    for (long su = -24; su <= 24; ++su)
      for (long sv = -24; sv <= 24; ++sv) {
        const Vector y = lift(su, sv);
        CHECK(scene_contains(s, project(y)) == span_membership(v, y));
      }
  }
}

TEST_CASE("region containment") {
  const std::vector<Point2> tri{pt(2, 2), pt(4, 2), pt(4, 4)};
  CHECK(region_contains(tri, pt(3, 2)));
  CHECK(region_contains(tri, pt(4, 4)));
  CHECK_FALSE(region_contains(tri, pt(2, 3)));
  const std::vector<Point2> seg{pt(0, 0), pt(2, 2)};
  CHECK(region_contains(seg, pt(1, 1)));
  CHECK_FALSE(region_contains(seg, pt(1, 0)));
  CHECK_FALSE(region_contains(seg, pt(3, 3)));
  CHECK(region_contains({pt(1, 1)}, pt(1, 1)));
}

TEST_CASE("svg rendering") {
  const std::string empty = render_svg(PlotScene{});
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(empty, "<polygon") == 0);
  CHECK(empty.find("viewBox=\"0 0 1 1\"") != std::string::npos);

  const PlotScene tri = plot_eigenspace(kFormA);
  const std::string svg = render_svg(tri);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(svg.find("points=\"2,-2 4,-2 4,-4\"") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  CHECK(render_svg(tri) == svg);
  CHECK(render_svg(plot_eigenspace(kFormA)) == svg);

  const std::string pair = render_svg(std::vector<NamedScene>{{"a", tri}, {"b", tri}});
  CHECK(count(pair, "<svg") == 3);
}

TEST_CASE("scene json") {
  const nlohmann::json j = to_json(plot_eigenspace(kFormA));
  REQUIRE(j["polygons"].size() == 1);
  CHECK(j["polygons"][0]["vertices"][1] == nlohmann::json::array({"4", "2"}));
  CHECK(j["segments"].empty());
}

TEST_CASE("figures") {
  for (int f = 1; f <= 6; ++f) {
    const auto panels = figure_panels(f);
    CHECK_FALSE(panels.empty());
    for (const auto& p : panels) CHECK_FALSE(p.scene.empty());
    CHECK(render_svg(panels) == render_svg(figure_panels(f)));
  }
  CHECK_THROWS_AS(figure_panels(7), Error);
  CHECK_THROWS_AS(figure_panels(0), Error);
}
