#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "maxplus/io.hpp"
#include "maxplus/plot.hpp"

namespace maxplus::plot {

namespace {

constexpr int kPanelPixels = 480;

constexpr const char* kStyleSheet =
    "polygon,polyline{stroke-width:1.5;vector-effect:non-scaling-stroke;stroke-linejoin:round}"
    "polyline{fill:none}"
    ".span{fill:#a6bddb;stroke:#2b8cbe}"
    ".eig{fill:#fdae6b;fill-opacity:0.7;stroke:#d94801}"
    ".red{fill:#fc9272;stroke:#cb181d}"
    ".grey{fill:#d9d9d9;fill-opacity:0.8;stroke:#969696}"
    ".green{fill:#74c476;stroke:#006d2c}"
    ".ball{fill:none;stroke:#cb181d;stroke-width:2}"
    ".level-0{fill:none;stroke:#08306b;stroke-width:3}"
    ".level-1{fill:none;stroke:#238b45;stroke-width:2.25}"
    ".level-2{fill:none;stroke:#8c510a;stroke-width:1.5}"
    ".level-3{fill:none;stroke:#cb181d;stroke-width:1}"
    ".generator{fill:#08519c}"
    ".cell-generator{fill:#000000}"
    ".center{fill:#cb181d}"
    ".point{fill:#525252}";

// Exact rounding to four decimals.
std::string num(const Rational& r) {
  const Rational scaled = r * 10000 + Rational(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational rounded(q, 10000);
  rounded.canonicalize();
  return io::format_rational(rounded);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  Rational x, y, w, h;
};

Frame frame_of(const PlotScene& scene) {
  std::optional<Rational> umin, umax, vmin, vmax;
  auto widen = [&](const Point2& p) {
    if (!umin || p.u < *umin) umin = p.u;
    if (!umax || p.u > *umax) umax = p.u;
    if (!vmin || p.v < *vmin) vmin = p.v;
    if (!vmax || p.v > *vmax) vmax = p.v;
  };
  for (const auto& poly : scene.polygons)
    for (const auto& p : poly.vertices) widen(p);
  for (const auto& seg : scene.segments)
    for (const auto& p : seg.points) widen(p);
  for (const auto& pt : scene.points) widen(pt.at);
  if (!umin) return {0, 0, 1, 1};
  Rational w = *umax - *umin;
  Rational h = *vmax - *vmin;
  if (w == 0) w = std::max(h, Rational(1));
  if (h == 0) h = std::max(w, Rational(1));
  const Rational cu = (*umin + *umax) / 2;
  const Rational cv = (*vmin + *vmax) / 2;
  const Rational fw = w * Rational(6, 5);
  const Rational fh = h * Rational(6, 5);
  // y is flipped so that v grows upwards.
  return {cu - fw / 2, -cv - fh / 2, fw, fh};
}

std::string point_list(const std::vector<Point2>& pts) {
  std::string out;
  for (std::size_t n = 0; n < pts.size(); ++n) {
    if (n) out += ' ';
    out += num(pts[n].u) + "," + num(-pts[n].v);
  }
  return out;
}

void write_body(std::ostringstream& out, const PlotScene& scene, const Frame& f) {
  const Rational r = std::max(f.w, f.h) / 80;
  for (const auto& poly : scene.polygons)
    out << "<polygon class=\"" << escape(poly.style) << "\" points=\"" << point_list(poly.vertices)
        << "\"><title>" << escape(poly.label) << "</title></polygon>\n";
  for (const auto& seg : scene.segments)
    out << "<polyline class=\"" << escape(seg.style) << "\" points=\"" << point_list(seg.points)
        << "\"><title>" << escape(seg.label) << "</title></polyline>\n";
  for (const auto& pt : scene.points) {
    if (pt.style == "cell-generator") {
      out << "<rect class=\"" << escape(pt.style) << "\" x=\"" << num(pt.at.u - r / 2) << "\" y=\""
          << num(-pt.at.v - r / 2) << "\" width=\"" << num(r) << "\" height=\"" << num(r)
          << "\"><title>" << escape(pt.label) << "</title></rect>\n";
    } else {
      const Rational radius = pt.style == "center" ? r * 2 : r;
      out << "<circle class=\"" << escape(pt.style) << "\" cx=\"" << num(pt.at.u) << "\" cy=\""
          << num(-pt.at.v) << "\" r=\"" << num(radius) << "\"><title>" << escape(pt.label)
          << "</title></circle>\n";
    }
  }
}

std::string view_box(const Frame& f) {
  return num(f.x) + " " + num(f.y) + " " + num(f.w) + " " + num(f.h);
}

int pixel_height(const Frame& f) {
  const Rational px = Rational(kPanelPixels) * f.h / f.w;
  const long h = std::lround(px.get_d());
  return static_cast<int>(std::clamp(h, 48L, 4L * kPanelPixels));
}

}  // namespace

std::string render_svg(const PlotScene& scene) {
  const Frame f = frame_of(scene);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kPanelPixels
      << "\" height=\"" << pixel_height(f) << "\" viewBox=\"" << view_box(f) << "\">\n"
      << "<title>" << escape(scene.title) << "</title>\n"
      << "<style>" << kStyleSheet << "</style>\n";
  write_body(out, scene, f);
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const std::vector<NamedScene>& panels) {
  if (panels.size() == 1) return render_svg(panels.front().scene);
  std::ostringstream out;
  const std::size_t count = std::max<std::size_t>(panels.size(), 1);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kPanelPixels * count << "\" height=\"" << kPanelPixels << "\" viewBox=\"0 0 "
      << kPanelPixels * count << " " << kPanelPixels << "\">\n"
      << "<style>" << kStyleSheet << "</style>\n";
  for (std::size_t n = 0; n < panels.size(); ++n) {
    const Frame f = frame_of(panels[n].scene);
    out << "<svg id=\"" << escape(panels[n].name) << "\" x=\"" << kPanelPixels * n
        << "\" y=\"0\" width=\"" << kPanelPixels << "\" height=\"" << kPanelPixels
        << "\" viewBox=\"" << view_box(f) << "\">\n"
        << "<title>" << escape(panels[n].scene.title) << "</title>\n";
    write_body(out, panels[n].scene, f);
    out << "</svg>\n";
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

nlohmann::json point_json(const Point2& p) {
  return nlohmann::json::array({io::format_rational(p.u), io::format_rational(p.v)});
}

nlohmann::json points_json(const std::vector<Point2>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

}  // namespace

nlohmann::json to_json(const PlotScene& scene) {
  nlohmann::json out;
  out["title"] = scene.title;
  out["polygons"] = nlohmann::json::array();
  for (const auto& poly : scene.polygons)
    out["polygons"].push_back({{"label", poly.label},
                               {"style", poly.style},
                               {"unbounded", poly.unbounded},
                               {"vertices", points_json(poly.vertices)}});
  out["segments"] = nlohmann::json::array();
  for (const auto& seg : scene.segments)
    out["segments"].push_back({{"label", seg.label},
                               {"style", seg.style},
                               {"unbounded", seg.unbounded},
                               {"points", points_json(seg.points)}});
  out["points"] = nlohmann::json::array();
  for (const auto& pt : scene.points)
    out["points"].push_back({{"label", pt.label}, {"style", pt.style}, {"at", point_json(pt.at)}});
  return out;
}

}  // namespace maxplus::plot
