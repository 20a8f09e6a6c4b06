#include <string>

#include "maxplus/definite.hpp"
#include "maxplus/error.hpp"
#include "maxplus/hilbert.hpp"
#include "maxplus/io.hpp"
#include "maxplus/plot.hpp"

namespace maxplus::plot {

namespace {

const Matrix& closure_example_a() {
  static const Matrix m{{1, 3, 0}, {2, 0, 0}, {0, -1, -5}};
  return m;
}

const Matrix& closure_example_b() {
  static const Matrix m{{2, 0, 2}, {1, 1, 3}, {0, -3, -2}};
  return m;
}

const Matrix& cell_example() {
  static const Matrix m{{1, 4, 6, 7}, {4, 1, 5, 8}, {0, 0, 0, 0}};
  return m;
}

const Matrix& hilbert_example() {
  static const Matrix m{{0, -4, 1}, {1, 0, 1}, {-5, -7, 0}};
  return m;
}

void append(PlotScene& into, const PlotScene& from) {
  into.polygons.insert(into.polygons.end(), from.polygons.begin(), from.polygons.end());
  into.segments.insert(into.segments.end(), from.segments.begin(), from.segments.end());
  into.points.insert(into.points.end(), from.points.begin(), from.points.end());
}

PlotScene titled(PlotScene s, std::string title) {
  s.title = std::move(title);
  return s;
}

// Boundaries of eig(A_mu) for mu = 0 followed by the given shifts.
PlotScene level_sets(const Matrix& a, const std::vector<Rational>& shifts) {
  PlotScene scene;
  for (std::size_t n = 0; n < shifts.size(); ++n) {
    const Matrix m = shifts[n] == 0 ? a : shifted_definite(a, shifts[n]).matrix;
    append(scene, plot_eigenspace(m, {}, "mu=" + io::format_rational(shifts[n]),
                                  "level-" + std::to_string(n)));
  }
  return scene;
}

std::vector<NamedScene> closure_figure(const Matrix& a, const std::string& name) {
  return {{"span", titled(plot_span(a), "span(" + name + ")")},
          {"eig", titled(plot_eigenspace(definite_closure(a)), "eig(" + name + "')")}};
}

std::vector<NamedScene> cells_figure() {
  const std::vector<Highlight> highlights = {
      {"S", io::parse_type("{2,3};{4};{1}"), "red"},
      {"P", io::parse_type("{};{4};{1,2,3}"), "grey"},
      {"U", io::parse_type("{3};{1,3,4};{2}"), "green"},
  };
  return {{"cells", titled(plot_span(cell_example(), highlights), "span(V) with X_S, X_P, X_U")}};
}

std::vector<NamedScene> inner_family_figure() {
  const Matrix& a = hilbert_example();
  return {{"span", titled(plot_span(a), "span(A)")},
          {"levels", titled(level_sets(a, {0, Rational(-1, 2), -1, Rational(-3, 2)}),
                            "boundaries of eig(A_mu)")}};
}

std::vector<NamedScene> inscribed_balls_figure() {
  const Matrix& a = hilbert_example();
  PlotScene scene = plot_span(a);
  append(scene, plot_eigenspace(a));
  const Distance radius = inscribed_radius(a);
  const Rational lambda = -radius.value();
  const EigenBasis centers = eigenspace_basis(shifted_definite(a, lambda).matrix);
  for (const auto& c : centers.vectors) {
    const std::string label = "ball " + io::format_vector(c);
    append(scene, plot_eigenspace(hilbert_ball_matrix(c, radius.value()), {}, label, "ball"));
    scene.points.push_back({"center " + io::format_vector(c), "center", project(c)});
  }
  return {{"balls", titled(std::move(scene), "inscribed Hilbert balls")}};
}

std::vector<NamedScene> spheres_figure() {
  const Vector x{5, 4, 0};
  const Rational d = 3;
  const Matrix ball = hilbert_ball_matrix(x, d);
  PlotScene scene = level_sets(ball, {0, -1, -2});
  const EigenBasis center = eigenspace_basis(shifted_definite(ball, -d).matrix);
  for (const auto& c : center.vectors)
    scene.points.push_back({"eig(D_-3) " + io::format_vector(c), "center", project(c)});
  return {{"spheres", titled(std::move(scene), "Hilbert spheres around [5 4 0]")}};
}

}  // namespace

std::vector<NamedScene> figure_panels(int figure) {
  switch (figure) {
    case 1: return closure_figure(closure_example_a(), "A");
    case 2: return closure_figure(closure_example_b(), "B");
    case 3: return cells_figure();
    case 4: return inner_family_figure();
    case 5: return inscribed_balls_figure();
    case 6: return spheres_figure();
    default:
      fail(ErrorKind::kInvalidInput, "figure must be between 1 and 6");
  }
}

}  // namespace maxplus::plot
