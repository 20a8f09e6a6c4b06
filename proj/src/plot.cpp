#include "maxplus/plot.hpp"

#include <algorithm>
#include <string>

#include "maxplus/definite.hpp"
#include "maxplus/error.hpp"
#include "maxplus/io.hpp"
#include "maxplus/path_algebra.hpp"

namespace maxplus::plot {

namespace {

// a*u + b*v >= c
struct HalfPlane {
  Rational a, b, c;
};

Rational cross(const Point2& o, const Point2& p, const Point2& q) {
  return (p.u - o.u) * (q.v - o.v) - (p.v - o.v) * (q.u - o.u);
}

bool point_less(const Point2& p, const Point2& q) {
  if (p.u != q.u) return p.u < q.u;
  return p.v < q.v;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Rational side(const HalfPlane& h, const Point2& p) { return h.a * p.u + h.b * p.v - h.c; }

Point2 crossing(const HalfPlane& h, const Point2& s, const Point2& e) {
  const Rational fs = side(h, s);
  const Rational t = fs / (fs - side(h, e));
  return {s.u + t * (e.u - s.u), s.v + t * (e.v - s.v)};
}

std::vector<Point2> clip(const std::vector<Point2>& poly, const HalfPlane& h) {
  std::vector<Point2> out;
  for (std::size_t n = 0; n < poly.size(); ++n) {
    const Point2& s = poly[(n + poly.size() - 1) % poly.size()];
    const Point2& e = poly[n];
    const bool s_in = side(h, s) >= 0;
    const bool e_in = side(h, e) >= 0;
    if (e_in) {
      if (!s_in) out.push_back(crossing(h, s, e));
      out.push_back(e);
    } else if (s_in) {
      out.push_back(crossing(h, s, e));
    }
  }
  return out;
}

std::vector<HalfPlane> half_planes(const Matrix& m, const Projection& p) {
  auto coef = [&](std::size_t idx) -> std::pair<Rational, Rational> {
    if (idx == p.i) return {1, 0};
    if (idx == p.j) return {0, 1};
    return {0, 0};
  };
  std::vector<HalfPlane> out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      if (r == c || m(r, c).is_bottom()) continue;
      const auto [ar, br] = coef(r);
      const auto [ac, bc] = coef(c);
      out.push_back({ar - ac, br - bc, m(r, c).value()});
    }
  return out;
}

Rational max_abs_off_diagonal(const Matrix& m) {
  Rational best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c).is_finite()) best = std::max(best, Rational(abs(m(r, c).value())));
  return best;
}

struct Region {
  std::vector<Point2> vertices;
  bool unbounded = false;
};

struct Box {
  Rational u0, u1, v0, v1;
};

Box square(const Rational& half) { return {-half, half, -half, half}; }

Box around(const std::vector<Point2>& pts) {
  Box b{pts.front().u, pts.front().u, pts.front().v, pts.front().v};
  for (const auto& q : pts) {
    b.u0 = std::min(b.u0, q.u);
    b.u1 = std::max(b.u1, q.u);
    b.v0 = std::min(b.v0, q.v);
    b.v1 = std::max(b.v1, q.v);
  }
  const Rational pad = std::max(b.u1 - b.u0, b.v1 - b.v0) / 2 + 1;
  return {b.u0 - pad, b.u1 + pad, b.v0 - pad, b.v1 + pad};
}

bool on_edge(const Box& b, const Point2& q) {
  return q.u == b.u0 || q.u == b.u1 || q.v == b.v0 || q.v == b.v1;
}

// Intersection of {x : M_rc <= x_r - x_c} with a box.
Region region_of(const Matrix& m, const Projection& p, const Box& box) {
  std::vector<Point2> poly = {{box.u0, box.v0}, {box.u1, box.v0}, {box.u1, box.v1}, {box.u0, box.v1}};
  for (const auto& h : half_planes(m, p)) {
    poly = clip(poly, h);
    if (poly.empty()) fail(ErrorKind::kEmptyRegion, "half-planes have empty intersection");
  }
  Region out;
  out.vertices = convex_hull(std::move(poly));
  const Matrix star = kleene_star(m);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (star(r, c).is_bottom()) out.unbounded = true;
  return out;
}

// Vertices of the exact region lie within twice the largest bound, so a
// first pass with that square finds them; unbounded regions are then cut
// at a box fitted around those vertices.
Region fitted_region(const Matrix& m, const Projection& p) {
  const Box wide = square(2 * max_abs_off_diagonal(m) + 2);
  Region region = region_of(m, p, wide);
  if (!region.unbounded) return region;
  std::vector<Point2> corners;
  for (const auto& q : region.vertices)
    if (!on_edge(wide, q)) corners.push_back(q);
  if (corners.empty()) return region;
  return region_of(m, p, around(corners));
}

void emit(PlotScene& scene, Region region, const std::string& label, const std::string& style) {
  if (region.vertices.size() >= 3) {
    scene.polygons.push_back({label, style, std::move(region.vertices), region.unbounded});
  } else if (region.vertices.size() == 2) {
    scene.segments.push_back({label, style, std::move(region.vertices), region.unbounded});
  } else {
    scene.points.push_back({label, style, region.vertices.front()});
  }
}

void require_three_rows(const Matrix& m, const char* what) {
  if (m.rows() != 3)
    fail(ErrorKind::kInvalidInput, std::string(what) + " needs exactly three rows");
}

}  // namespace

void require_projection(const Projection& p) {
  if (p.i >= 3 || p.j >= 3 || p.k >= 3 || p.i == p.j || p.j == p.k || p.i == p.k)
    fail(ErrorKind::kInvalidInput, "projection indices must be a permutation of 1, 2, 3");
}

Point2 project(const Vector& x, const Projection& p) {
  require_projection(p);
  if (x.size() != 3 || !x.has_full_support())
    fail(ErrorKind::kInvalidInput, "only full-support points of R^3 can be projected");
  return {x[p.i].value() - x[p.k].value(), x[p.j].value() - x[p.k].value()};
}

PlotScene plot_eigenspace(const Matrix& a, const Projection& p, const std::string& label,
                          const std::string& style) {
  require_projection(p);
  require_square(a, "plot_eigenspace");
  require_three_rows(a, "plot_eigenspace");
  const InequalitySystem system = reduced_system(a);
  const Matrix m = system_matrix(system);
  PlotScene scene;
  scene.title = label;
  emit(scene, fitted_region(m, p), label, style);
  return scene;
}

bool region_contains(const std::vector<Point2>& vertices, const Point2& q) {
  const std::vector<Point2> hull = convex_hull(vertices);
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull.front() == q;
  if (hull.size() == 2) {
    const Point2& s = hull[0];
    const Point2& e = hull[1];
    return cross(s, e, q) == 0 && std::min(s.u, e.u) <= q.u && q.u <= std::max(s.u, e.u) &&
           std::min(s.v, e.v) <= q.v && q.v <= std::max(s.v, e.v);
  }
  for (std::size_t n = 0; n < hull.size(); ++n)
    if (cross(hull[n], hull[(n + 1) % hull.size()], q) < 0) return false;
  return true;
}

bool scene_contains(const PlotScene& scene, const Point2& q) {
  for (const auto& poly : scene.polygons)
    if (region_contains(poly.vertices, q)) return true;
  for (const auto& seg : scene.segments)
    if (region_contains(seg.points, q)) return true;
  for (const auto& pt : scene.points)
    if (pt.at == q) return true;
  return false;
}

PlotScene plot_span(const Matrix& v, const std::vector<Highlight>& highlights,
                    const Projection& p, std::size_t budget) {
  require_projection(p);
  require_column_configuration(v);
  require_three_rows(v, "plot_span");

  // Finite parts of the span stay within the coordinate ranges of the
  // full-support columns.
  Rational spread = 0;
  std::vector<Point2> columns;
  for (std::size_t c = 0; c < v.cols(); ++c) {
    for (std::size_t r = 0; r < v.rows(); ++r)
      if (v(r, c).is_finite()) spread = std::max(spread, Rational(abs(v(r, c).value())));
    if (v.column(c).has_full_support()) columns.push_back(project(v.column(c), p));
  }
  const Box wide = square(4 * spread + 2);
  const Box box = columns.empty() ? wide : around(columns);
  auto cell_region = [&](const Matrix& cell) {
    try {
      return region_of(cell, p, box);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kEmptyRegion) throw;
      return region_of(cell, p, wide);
    }
  };

  PlotScene cells;
  for (const auto& type : full_types(v.rows(), v.cols(), budget)) {
    const Matrix cell = cell_matrix(v, type);
    if (max_cycle_mean(cell).lambda > Scalar::unit()) continue;
    Region region = cell_region(cell);
    const std::string label = io::format_type(type);
    if (region.vertices.size() >= 3) {
      const bool seen = std::any_of(cells.polygons.begin(), cells.polygons.end(),
                                    [&](const Polygon& q) { return q.vertices == region.vertices; });
      if (!seen) emit(cells, std::move(region), label, "span");
    } else if (region.vertices.size() == 2) {
      const bool seen = std::any_of(cells.segments.begin(), cells.segments.end(),
                                    [&](const Polyline& q) { return q.points == region.vertices; });
      if (!seen) emit(cells, std::move(region), label, "span");
    } else {
      const bool seen = std::any_of(cells.points.begin(), cells.points.end(),
                                    [&](const Marker& q) { return q.at == region.vertices.front(); });
      if (!seen) emit(cells, std::move(region), label, "span");
    }
  }

  PlotScene scene;
  scene.title = "span";
  scene.polygons = cells.polygons;
  auto covered = [&](const Point2& q) {
    return std::any_of(scene.polygons.begin(), scene.polygons.end(),
                       [&](const Polygon& poly) { return region_contains(poly.vertices, q); });
  };
  for (const auto& seg : cells.segments) {
    const bool inside = std::any_of(
        scene.polygons.begin(), scene.polygons.end(), [&](const Polygon& poly) {
          return region_contains(poly.vertices, seg.points.front()) &&
                 region_contains(poly.vertices, seg.points.back());
        });
    if (!inside) scene.segments.push_back(seg);
  }

  std::vector<Marker> generators;
  for (std::size_t c = 0; c < v.cols(); ++c) {
    const Vector col = v.column(c);
    if (!col.has_full_support()) continue;
    const Point2 at = project(col, p);
    const bool seen = std::any_of(generators.begin(), generators.end(),
                                  [&](const Marker& m) { return m.at == at; });
    if (!seen) generators.push_back({"v" + std::to_string(c + 1), "generator", at});
  }
  for (const auto& pt : cells.points) {
    const bool on_generator = std::any_of(generators.begin(), generators.end(),
                                          [&](const Marker& m) { return m.at == pt.at; });
    const bool on_segment = std::any_of(scene.segments.begin(), scene.segments.end(),
                                        [&](const Polyline& s) { return region_contains(s.points, pt.at); });
    if (!on_generator && !on_segment && !covered(pt.at)) scene.points.push_back(pt);
  }

  for (const auto& h : highlights) {
    const Matrix cell = cell_matrix(v, h.type);
    if (max_cycle_mean(cell).lambda > Scalar::unit())
      fail(ErrorKind::kEmptyCell, "highlighted cell " + h.label + " is empty");
    emit(scene, cell_region(cell), h.label, h.style);
    for (const auto& g : cell_generators(v, h.type).generators)
      generators.push_back({h.label + " " + io::format_vector(g), "cell-generator", project(g, p)});
  }
  scene.points.insert(scene.points.end(), generators.begin(), generators.end());
  return scene;
}

}  // namespace maxplus::plot
