#pragma once

// Exact planar pictures of three-dimensional eigenspaces, spans and cells.
// A point x of R^3 is drawn at (u, v) = (x_i - x_k, x_j - x_k) for a
// projection (i, j, k); the default is (x_1 - x_3, x_2 - x_3).

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxplus/matrix.hpp"
#include "maxplus/polytrope.hpp"

namespace maxplus::plot {

struct Point2 {
  Rational u;
  Rational v;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Projection {
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 2;
};

/// Closed region with at least three vertices, counterclockwise, starting
/// at the leftmost (then lowest) vertex. Unbounded regions are clipped to
/// a box and flagged.
struct Polygon {
  std::string label;
  std::string style;
  std::vector<Point2> vertices;
  bool unbounded = false;
};

struct Polyline {
  std::string label;
  std::string style;
  std::vector<Point2> points;
  bool unbounded = false;
};

struct Marker {
  std::string label;
  std::string style;
  Point2 at;
};

struct PlotScene {
  std::string title;
  std::vector<Polygon> polygons;
  std::vector<Polyline> segments;
  std::vector<Marker> points;

  bool empty() const { return polygons.empty() && segments.empty() && points.empty(); }
};

struct NamedScene {
  std::string name;
  PlotScene scene;
};

struct Highlight {
  std::string label;
  CombinatorialType type;
  std::string style;
};

/// Throws InvalidInput unless i, j, k are distinct and below 3.
void require_projection(const Projection& p);

Point2 project(const Vector& x, const Projection& p = {});

/// Convex region cut out by the supporting half-planes of eig(A), returned
/// as one polygon, segment or point. Throws NotDefinite, InvalidInput
/// (n != 3), EmptyRegion.
PlotScene plot_eigenspace(const Matrix& a, const Projection& p = {},
                          const std::string& label = "eig", const std::string& style = "eig");

/// Every nonempty cell of a full combinatorial type of the columns of V
/// (three rows), deduplicated, plus one marker per full-support column.
/// Highlighted types are drawn on top together with their generators.
/// Throws InvalidInput, BudgetExceeded.
PlotScene plot_span(const Matrix& v, const std::vector<Highlight>& highlights = {},
                    const Projection& p = {}, std::size_t budget = 100000);

/// True iff q lies in the closed convex hull of the given vertices.
bool region_contains(const std::vector<Point2>& vertices, const Point2& q);
/// True iff q lies in some polygon, segment or point of the scene.
bool scene_contains(const PlotScene& scene, const Point2& q);

/// Standalone SVG 1.1 document.
std::string render_svg(const PlotScene& scene);
/// Panels side by side in one SVG 1.1 document; a single panel renders
/// as its scene alone.
std::string render_svg(const std::vector<NamedScene>& panels);

nlohmann::json to_json(const PlotScene& scene);

/// Available figure numbers: 1 to 6. Throws InvalidInput otherwise.
std::vector<NamedScene> figure_panels(int figure);

}  // namespace maxplus::plot
