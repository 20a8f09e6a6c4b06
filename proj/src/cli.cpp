#include "maxplus/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxplus/assignment.hpp"
#include "maxplus/definite.hpp"
#include "maxplus/error.hpp"
#include "maxplus/hilbert.hpp"
#include "maxplus/io.hpp"
#include "maxplus/path_algebra.hpp"
#include "maxplus/plot.hpp"
#include "maxplus/polytrope.hpp"

namespace maxplus::cli {

namespace {

using nlohmann::json;

struct Outcome {
  json result;
  std::string text;
};

struct Options {
  std::string file;
  std::string perm;
  std::string point;
  std::string type;
  std::string member;
  std::string x;
  std::string y;
  std::string center;
  std::string radius;
  bool exists = false;
  bool generators = false;
  bool verify = false;
  std::vector<std::string> highlights;
  int figure = 0;
  std::string svg;
  std::string out_dir;
  std::string panel;
  std::vector<int> project;
};

std::string one_based(const std::vector<std::size_t>& idx, const char* sep = " ") {
  std::string out;
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (n) out += sep;
    out += std::to_string(idx[n] + 1);
  }
  return out;
}

json one_based_json(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

std::string plane_text(const Plane& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

json plane_json(const Plane& p) { return json::array({p.first + 1, p.second + 1}); }

json vectors_json(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(io::to_json(v));
  return out;
}

std::string vectors_text(const std::vector<Vector>& vs) {
  std::string out;
  for (const auto& v : vs) out += io::format_vector(v) + "\n";
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Session {
 public:
  explicit Session(Options& o) : o_(o) {}

  json& input() { return input_; }

  Matrix matrix() {
    io::MatrixDocument doc;
    if (o_.file == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      doc = io::parse_matrix(buf.str(), "stdin");
    } else {
      doc = io::read_matrix_file(o_.file);
    }
    input_["file"] = o_.file;
    input_["name"] = doc.name;
    input_["matrix"] = io::to_json(doc.matrix);
    name_ = doc.name;
    return doc.matrix;
  }

  const std::string& name() const { return name_; }

  Vector vector_option(const char* key, const std::string& text) {
    Vector v = io::parse_vector(text);
    input_[key] = io::to_json(v);
    return v;
  }

  plot::Projection projection() {
    plot::Projection p;
    if (!o_.project.empty()) {
      for (int v : o_.project)
        if (v < 1 || v > 3) fail(ErrorKind::kInvalidInput, "projection indices are 1, 2 or 3");
      p = {static_cast<std::size_t>(o_.project[0] - 1), static_cast<std::size_t>(o_.project[1] - 1),
           static_cast<std::size_t>(o_.project[2] - 1)};
      input_["project"] = o_.project;
    }
    plot::require_projection(p);
    return p;
  }

 private:
  Options& o_;
  json input_ = json::object();
  std::string name_;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::kInvalidInput, "cannot write '" + path.string() + "'");
  f << content;
}

// Writes or prints the panels of a plot.
Outcome emit_plot(const Options& o, const std::string& stem, std::vector<plot::NamedScene> panels) {
  if (!o.panel.empty()) {
    auto it = std::find_if(panels.begin(), panels.end(),
                           [&](const plot::NamedScene& p) { return p.name == o.panel; });
    if (it == panels.end()) fail(ErrorKind::kInvalidInput, "no panel named '" + o.panel + "'");
    panels = {*it};
  }
  Outcome r;
  r.result["panels"] = json::array();
  for (const auto& p : panels)
    r.result["panels"].push_back({{"name", p.name}, {"scene", plot::to_json(p.scene)}});
  const std::string combined = plot::render_svg(panels);

  json written = json::array();
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    const std::filesystem::path dir(o.out_dir);
    write_file(dir / (stem + ".svg"), combined);
    written.push_back((dir / (stem + ".svg")).string());
    if (panels.size() > 1)
      for (const auto& p : panels) {
        const auto path = dir / (stem + "-" + p.name + ".svg");
        write_file(path, plot::render_svg(p.scene));
        written.push_back(path.string());
      }
  }
  if (!o.svg.empty()) {
    write_file(o.svg, combined);
    written.push_back(o.svg);
  }
  r.result["files"] = written;
  if (written.empty()) {
    r.text = combined;
  } else {
    for (const auto& w : written) r.text += "wrote " + w.get<std::string>() + "\n";
  }
  return r;
}

using Handler = std::function<Outcome(Session&)>;

struct Command {
  CLI::App* app;
  std::string name;
  Handler run;
};

void register_commands(CLI::App& app, Options& o, std::vector<Command>& commands) {
  auto matrix_command = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("matrix", o.file, "Matrix file, '-' for standard input")->required();
    return sub;
  };

  commands.push_back({matrix_command("star", "Kleene star A*"), "star", [](Session& s) {
                        const Matrix star = kleene_star(s.matrix());
                        return Outcome{{{"matrix", io::to_json(star)}}, io::format_matrix(star)};
                      }});

  commands.push_back(
      {matrix_command("cyclemean", "Maximal cycle mean and a critical cycle"), "cyclemean",
       [](Session& s) {
         const CycleMeanResult cm = max_cycle_mean(s.matrix());
         Outcome r;
         r.result = {{"lambda", io::to_json(cm.lambda)},
                     {"cycle", one_based_json(cm.witness_cycle)}};
         r.text = "lambda: " + io::format_scalar(cm.lambda) + "\ncycle: " +
                  (cm.witness_cycle.empty() ? "none" : one_based(cm.witness_cycle)) + "\n";
         return r;
       }});

  commands.push_back(
      {matrix_command("permanent", "Permanent and all maximal permutations"), "permanent",
       [](Session& s) {
         const PermanentResult p = permanent(s.matrix());
         Outcome r;
         json perms = json::array();
         std::string listed;
         for (const auto& sigma : p.maximal_permutations) {
           perms.push_back(io::format_permutation(sigma));
           listed += (listed.empty() ? "" : " ") + io::format_permutation(sigma);
         }
         r.result = {{"value", io::to_json(p.value)},
                     {"strong", p.strong},
                     {"maximal_permutations", perms}};
         r.text = "permanent: " + io::format_scalar(p.value) + "\nstrong: " + yes_no(p.strong) +
                  "\nmaximal permutations: " + (listed.empty() ? "none" : listed) + "\n";
         return r;
       }});

  {
    CLI::App* sub = matrix_command("definite-form", "Definite form along a maximal permutation");
    sub->add_option("--perm", o.perm, "Maximal permutation in cycle notation, e.g. \"(231)\"");
    commands.push_back({sub, "definite-form", [&o](Session& s) {
                          const Matrix a = s.matrix();
                          Permutation sigma = o.perm.empty()
                                                  ? first_maximal_permutation(a)
                                                  : io::parse_permutation(o.perm, a.rows());
                          if (!o.perm.empty()) s.input()["perm"] = o.perm;
                          const DefiniteForm f = definite_form(a, sigma);
                          const std::string perm = io::format_permutation(f.source_permutation);
                          return Outcome{{{"permutation", perm}, {"matrix", io::to_json(f.matrix)}},
                                         "permutation: " + perm + "\n" + io::format_matrix(f.matrix)};
                        }});
  }

  {
    CLI::App* sub = matrix_command("definite-closure", "Star of a definite form");
    sub->add_flag("--verify", o.verify, "Check that every definite form has the same star");
    commands.push_back({sub, "definite-closure", [&o](Session& s) {
                          const Matrix c = definite_closure(s.matrix(), o.verify);
                          if (o.verify) s.input()["verify"] = true;
                          return Outcome{{{"matrix", io::to_json(c)}}, io::format_matrix(c)};
                        }});
  }

  commands.push_back(
      {matrix_command("eig-basis", "Basis of the eigenspace of a definite matrix"), "eig-basis",
       [](Session& s) {
         const EigenBasis b = eigenspace_basis(s.matrix());
         Outcome r;
         json classes = json::array();
         for (std::size_t c = 0; c < b.class_map.size(); ++c)
           classes.push_back({{"column", c + 1},
                              {"basis_index", b.class_map[c].basis_index + 1},
                              {"scale", io::format_rational(b.class_map[c].scale)}});
         r.result = {{"vectors", vectors_json(b.vectors)}, {"columns", classes}};
         r.text = vectors_text(b.vectors);
         return r;
       }});

  commands.push_back(
      {matrix_command("ineq", "Non-redundant inequalities describing eig(A)"), "ineq",
       [](Session& s) {
         const InequalitySystem sys = reduced_system(s.matrix());
         Outcome r;
         r.result["constraints"] = json::array();
         for (const auto& c : sys.constraints()) {
           r.result["constraints"].push_back(
               {{"i", c.i + 1}, {"j", c.j + 1}, {"bound", io::format_rational(c.bound)}});
           r.text += "x" + std::to_string(c.i + 1) + " - x" + std::to_string(c.j + 1) +
                     " >= " + io::format_rational(c.bound) + "\n";
         }
         return r;
       }});

  commands.push_back(
      {matrix_command("supports", "Admissible eigenvector supports"), "supports",
       [](Session& s) {
         const Matrix a = s.matrix();
         Outcome r;
         r.result["supports"] = json::array();
         for (const auto& k : admissible_supports(a)) {
           const Vector v = eigenvector_with_support(a, k);
           r.result["supports"].push_back(
               {{"support", one_based_json(k)}, {"eigenvector", io::to_json(v)}});
           r.text += io::format_index_set(k) + "  " + io::format_vector(v) + "\n";
         }
         return r;
       }});

  {
    CLI::App* sub = matrix_command("type", "Combinatorial type of a point");
    sub->add_option("--point", o.point, "Full-support point, e.g. 3,4,0")->required();
    commands.push_back({sub, "type", [&o](Session& s) {
                          const Matrix v = s.matrix();
                          const CombinatorialType t =
                              combinatorial_type(v, s.vector_option("point", o.point));
                          const std::string text = io::format_type(t);
                          return Outcome{{{"type", text}}, text + "\n"};
                        }});
  }

  {
    CLI::App* sub = matrix_command("cell", "Cell of a combinatorial type");
    sub->add_option("--type", o.type, "Type such as \"{2,3};{4};{1}\"")->required();
    auto* ex = sub->add_flag("--exists", o.exists, "Only report whether the cell is nonempty");
    auto* gen = sub->add_flag("--generators", o.generators, "List the cell generators");
    auto* mem = sub->add_option("--member", o.member, "Test membership of a point");
    ex->excludes(gen)->excludes(mem);
    gen->excludes(mem);
    commands.push_back({sub, "cell", [&o](Session& s) {
      const Matrix v = s.matrix();
      const CombinatorialType t = io::parse_type(o.type);
      s.input()["type"] = io::format_type(t);
      Outcome r;
      if (!o.member.empty()) {
        const Vector y = s.vector_option("member", o.member);
        const bool in = cell_membership(v, t, y);
        if (in != cell_membership_by_type(v, t, y))
          throw std::logic_error("cell membership tests disagree");
        r.result = {{"member", in}};
        r.text = yes_no(in) + "\n";
        return r;
      }
      const Matrix cm = cell_matrix(v, t);
      const Scalar lambda = max_cycle_mean(cm).lambda;
      const bool exists = lambda <= Scalar::unit();
      if (o.exists) {
        r.result = {{"exists", exists}, {"lambda", io::to_json(lambda)}};
        r.text = exists ? "yes\n" : "no (lambda = " + io::format_scalar(lambda) + ")\n";
        return r;
      }
      if (o.generators) {
        const CellGenerators g = cell_generators(v, t);
        r.result = {{"generators", vectors_json(g.generators)},
                    {"excluded", vectors_json(g.excluded)}};
        r.text = vectors_text(g.generators);
        for (const auto& e : g.excluded) r.text += "excluded " + io::format_vector(e) + "\n";
        return r;
      }
      r.result = {{"cell_matrix", io::to_json(cm)},
                  {"lambda", io::to_json(lambda)},
                  {"exists", exists}};
      r.text = "cell matrix:\n" + io::format_matrix(cm);
      if (exists) {
        const Matrix star = kleene_star(cm);
        r.result["star"] = io::to_json(star);
        r.text += "star:\n" + io::format_matrix(star);
      } else {
        r.text += "empty (lambda = " + io::format_scalar(lambda) + ")\n";
      }
      return r;
    }});
  }

  {
    CLI::App* sub = app.add_subcommand("hdist", "Hilbert projective distance");
    sub->add_option("x", o.x, "First vector")->required();
    sub->add_option("y", o.y, "Second vector")->required();
    commands.push_back({sub, "hdist", [&o](Session& s) {
                          const Distance d = hilbert_distance(s.vector_option("x", o.x),
                                                              s.vector_option("y", o.y));
                          return Outcome{{{"distance", io::to_json(d)}},
                                         io::format_distance(d) + "\n"};
                        }});
  }

  {
    CLI::App* sub = matrix_command("boundary-dist", "Hilbert distance to the boundary of eig(A)");
    sub->add_option("--point", o.point, "Eigenvector with full support")->required();
    commands.push_back({sub, "boundary-dist", [&o](Session& s) {
                          const Matrix a = s.matrix();
                          const BoundaryDistance b =
                              dist_to_boundary(a, s.vector_option("point", o.point));
                          Outcome r;
                          json tight = json::array();
                          std::string tight_text;
                          for (const auto& p : b.tight_planes) {
                            tight.push_back(plane_json(p));
                            tight_text += (tight_text.empty() ? "" : " ") + plane_text(p);
                          }
                          r.result = {{"distance", io::to_json(b.distance)},
                                      {"nearest_plane", plane_json(b.nearest_plane)},
                                      {"nearest_point", io::to_json(b.nearest_point)},
                                      {"tight_planes", tight}};
                          r.text = "distance: " + io::format_distance(b.distance) +
                                   "\nnearest plane: " + plane_text(b.nearest_plane) +
                                   "\nnearest point: " + io::format_vector(b.nearest_point) +
                                   "\ntight planes: " + tight_text + "\n";
                          return r;
                        }});
  }

  {
    CLI::App* sub = matrix_command("interior", "Interior membership in eig(A)");
    sub->add_option("--point", o.point, "Eigenvector with full support")->required();
    commands.push_back({sub, "interior", [&o](Session& s) {
                          const Matrix a = s.matrix();
                          const InteriorResult ir =
                              interior_membership(a, s.vector_option("point", o.point));
                          return Outcome{{{"interior", ir.interior}, {"mu", io::to_json(ir.mu)}},
                                         "interior: " + yes_no(ir.interior) +
                                             "\nmu: " + io::format_scalar(ir.mu) + "\n"};
                        }});
  }

  commands.push_back({matrix_command("radius", "Radius of the inscribed Hilbert balls"), "radius",
                      [](Session& s) {
                        const Distance d = inscribed_radius(s.matrix());
                        return Outcome{{{"radius", io::to_json(d)}},
                                       io::format_distance(d) + "\n"};
                      }});

  {
    CLI::App* sub = app.add_subcommand("ball", "Definite matrix whose eigenspace is a Hilbert ball");
    sub->add_option("--center", o.center, "Full-support center")->required();
    sub->add_option("--radius", o.radius, "Positive radius")->required();
    commands.push_back({sub, "ball", [&o](Session& s) {
                          const Vector c = s.vector_option("center", o.center);
                          Rational d;
                          try {
                            d = io::parse_rational(o.radius);
                          } catch (const ParseError&) {
                            throw ParseError(1, 1, "--radius: invalid number '" + o.radius + "'");
                          }
                          s.input()["radius"] = io::format_rational(d);
                          const Matrix m = hilbert_ball_matrix(c, d);
                          return Outcome{{{"matrix", io::to_json(m)}}, io::format_matrix(m)};
                        }});
  }

  CLI::App* plot_cmd = app.add_subcommand("plot", "SVG pictures of three-dimensional examples");
  plot_cmd->require_subcommand(1, 1);
  plot_cmd->add_option("--svg", o.svg, "Write the SVG to this file");
  plot_cmd->add_option("--out-dir", o.out_dir, "Write the SVG and each panel into this directory");
  plot_cmd->add_option("--panel", o.panel, "Only this panel of a figure");
  plot_cmd->add_option("--project", o.project, "Coordinates i j k drawn as (x_i - x_k, x_j - x_k)")
      ->expected(3);

  {
    CLI::App* sub = plot_cmd->add_subcommand("eigenspace", "Polygon of eig(A)");
    sub->add_option("matrix", o.file, "Matrix file, '-' for standard input")->required();
    commands.push_back({sub, "plot eigenspace", [&o](Session& s) {
                          const Matrix a = s.matrix();
                          return emit_plot(o, s.name() + "-eig",
                                           {{"eig", plot::plot_eigenspace(a, s.projection())}});
                        }});
  }
  {
    CLI::App* sub = plot_cmd->add_subcommand("span", "Cells of the span of the columns");
    sub->add_option("matrix", o.file, "Matrix file, '-' for standard input")->required();
    sub->add_option("--highlight", o.highlights, "LABEL=TYPE, e.g. S={2,3};{4};{1}");
    commands.push_back({sub, "plot span", [&o](Session& s) {
                          const Matrix v = s.matrix();
                          std::vector<plot::Highlight> hs;
                          static const char* palette[] = {"red", "grey", "green"};
                          for (const auto& h : o.highlights) {
                            const auto eq = h.find('=');
                            if (eq == std::string::npos)
                              throw ParseError(1, 1, "--highlight expects LABEL=TYPE");
                            hs.push_back({h.substr(0, eq), io::parse_type(h.substr(eq + 1)),
                                          palette[hs.size() % 3]});
                          }
                          if (!hs.empty()) s.input()["highlight"] = o.highlights;
                          return emit_plot(o, s.name() + "-span",
                                           {{"span", plot::plot_span(v, hs, s.projection())}});
                        }});
  }
  {
    CLI::App* sub = plot_cmd->add_subcommand("figure", "Built-in example figures");
    sub->add_option("number", o.figure, "Figure number")->required()->check(CLI::Range(1, 6));
    commands.push_back({sub, "plot figure", [&o](Session& s) {
                          s.input()["figure"] = o.figure;
                          if (!o.project.empty())
                            fail(ErrorKind::kInvalidInput, "figures use the default projection");
                          return emit_plot(o, "fig" + std::to_string(o.figure),
                                           plot::figure_panels(o.figure));
                        }});
  }
}

json error_json(const Error& e) {
  json out = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* cm = dynamic_cast<const CycleMeanPositiveError*>(&e)) {
    out["lambda"] = io::to_json(cm->lambda());
    out["witness"] = one_based_json(cm->witness());
  }
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    out["line"] = pe->line();
    out["column"] = pe->column();
  }
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact max-plus matrix computations", "maxplus"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON report");

  Options opts;
  std::vector<Command> commands;
  register_commands(app, opts, commands);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    const auto extra = app.remaining();
    if (!extra.empty() && app.get_subcommands().empty()) {
      message = "unknown command '" + extra.front() + "'";
      err << message << "\nRun with --help for more information.\n";
    } else {
      const int code = app.exit(e, out, err);
      if (code == 0) return kSuccess;
    }
    if (as_json)
      out << json{{"command", ""},
                  {"input", json::object()},
                  {"error", {{"kind", "UsageError"}, {"message", message}}}}
                 .dump(2)
          << "\n";
    return kUsageError;
  }

  const Command* chosen = nullptr;
  for (const auto& c : commands)
    if (c.app->parsed()) chosen = &c;
  if (chosen == nullptr) return kUsageError;

  Session session(opts);
  json report = {{"command", chosen->name}};
  int code = kSuccess;
  std::string failure;
  try {
    Outcome r = chosen->run(session);
    report["input"] = session.input();
    report["result"] = std::move(r.result);
    if (!as_json) out << r.text;
  } catch (const ParseError& e) {
    report["input"] = session.input();
    report["error"] = error_json(e);
    failure = e.what();
    code = kUsageError;
  } catch (const Error& e) {
    report["input"] = session.input();
    report["error"] = error_json(e);
    failure = e.what();
    code = kDomainError;
  }
  if (as_json) {
    out << report.dump(2) << "\n";
  } else if (code != kSuccess) {
    err << "error: " << report["error"]["kind"].get<std::string>() << ": " << failure << "\n";
  }
  return code;
}

}  // namespace maxplus::cli
