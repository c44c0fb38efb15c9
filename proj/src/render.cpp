#include "ttoda/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ttoda {

namespace {

std::string fmt(double v) {
  // fixed decimals keep SVG byte-stable
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v + 0.0);  // normalize -0
  return buf;
}

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Canvas {
  int size;
  double scale;
  double px(double re) const { return 0.5 * size + scale * re; }
  double py(double im) const { return 0.5 * size - scale * im; }
};

void svg_open(std::ostringstream& out, int size) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
}

void svg_point(std::ostringstream& out, const Canvas& c, const complexd& pos, double r,
               const std::string& fill) {
  out << "  <circle cx=\"" << fmt(c.px(pos.real())) << "\" cy=\"" << fmt(c.py(pos.imag()))
      << "\" r=\"" << fmt(r) << "\" fill=\"" << fill << "\"/>\n";
}

void svg_label(std::ostringstream& out, const Canvas& c, const complexd& pos,
               const std::string& text, double dy) {
  out << "  <text x=\"" << fmt(c.px(pos.real()) + 6.0) << "\" y=\""
      << fmt(c.py(pos.imag()) - dy) << "\" font-size=\"11\" font-family=\"monospace\">"
      << text << "</text>\n";
}

}  // namespace

nlohmann::json json_complex(const complexd& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json json_matrix(const Eigen::MatrixXcd& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(json_complex(M(r, c)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json json_stokes_factors(int n, const StokesVector& S) {
  const CoxeterDiagram diagram = coxeter_diagram(n, 1);
  nlohmann::json out;
  out["rays"] = nlohmann::json::array();
  Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  for (const DiagramRay& ray : diagram.rays) {
    const Eigen::MatrixXcd Q = stokes_factor(n, S, ray.angle);
    product = product * Q;
    nlohmann::json jr;
    jr["angle"] = ray.angle;
    jr["roots"] = nlohmann::json::array();
    for (int idx : ray.points)
      for (const RootA& root : diagram.points[idx].sources)
        jr["roots"].push_back(root.label());
    jr["matrix"] = json_matrix(Q);
    out["rays"].push_back(jr);
  }
  out["ordered_product"] = json_matrix(product);
  return out;
}

nlohmann::json json_coxeter(const CoxeterDiagram& diagram) {
  nlohmann::json out;
  out["n"] = diagram.n;
  out["spin_order"] = diagram.spin_order;
  out["points"] = nlohmann::json::array();
  for (const DiagramPoint& p : diagram.points) {
    nlohmann::json jp;
    jp["position"] = json_complex(p.position);
    jp["sources"] = nlohmann::json::array();
    for (const RootA& r : p.sources) jp["sources"].push_back(r.label());
    out["points"].push_back(jp);
  }
  out["rays"] = nlohmann::json::array();
  for (const DiagramRay& r : diagram.rays)
    out["rays"].push_back({{"angle", r.angle}, {"points", r.points}});
  out["wheels"] = nlohmann::json::array();
  for (const DiagramWheel& w : diagram.wheels)
    out["wheels"].push_back({{"radius", w.radius}, {"points", w.points}});
  return out;
}

nlohmann::json json_polytope(const SolitonGraph& graph) {
  nlohmann::json out;
  out["n"] = graph.n;
  out["k"] = graph.k;
  out["vertices"] = nlohmann::json::array();
  for (const SolitonVertex& v : graph.vertices) {
    out["vertices"].push_back({{"weight", weight_label(graph.n, v.weight)},
                               {"position", json_complex(v.position)}});
  }
  out["edges"] = nlohmann::json::array();
  for (const SolitonEdge& e : graph.edges) {
    out["edges"].push_back({{"a", e.a},
                            {"b", e.b},
                            {"root", e.root.label()},
                            {"class", e.particle},
                            {"mass", e.mass},
                            {"multiplicity", json_complex(e.multiplicity)}});
  }
  out["positions"] = nlohmann::json::array();
  for (const auto& cluster : merged_positions(graph)) {
    nlohmann::json jp;
    jp["position"] = json_complex(graph.vertices[cluster.front()].position);
    jp["weights"] = nlohmann::json::array();
    for (int v : cluster)
      jp["weights"].push_back(weight_label(graph.n, graph.vertices[v].weight));
    out["positions"].push_back(jp);
  }
  return out;
}

nlohmann::json json_stokes(const TodaParams& params, const StokesVector& S) {
  nlohmann::json out;
  out["n"] = params.n;
  out["N"] = params.N;
  out["m"] = params.m;
  out["k"] = params.k;
  out["s"] = nlohmann::json::array();
  for (const complexd& v : S.s) out["s"].push_back(json_complex(v));
  return out;
}

nlohmann::json json_fit_report(const TodaParams& params, const RadialGrid& grid,
                               double x_a, double x_b, const AsymptoticsReport& report) {
  nlohmann::json out;
  out["n"] = params.n;
  out["m"] = params.m;
  out["grid"] = {{"x_min", std::exp(grid.u_min)},
                 {"x_max", std::exp(grid.u_max)},
                 {"nodes", grid.count}};
  out["window"] = nlohmann::json::array({x_a, x_b});
  out["template"] = template_name(report.fit.templ);
  out["newton_iterations"] = report.newton_iterations;
  out["max_residual"] = report.max_residual;
  out["fits"] = nlohmann::json::array();
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const VerifyRow& row = report.rows[i];
    out["fits"].push_back({{"k", row.k},
                           {"s_hat", row.s_hat},
                           {"s_closed", row.s_closed},
                           {"error", row.error},
                           {"relative", row.relative},
                           {"spread", report.fit.spread[i]},
                           {"sign", report.fit.sign[i]},
                           {"pass", row.pass}});
  }
  out["passed"] = report.passed;
  return out;
}

std::string svg_coxeter(const CoxeterDiagram& diagram, const RenderSpec& spec) {
  std::ostringstream out;
  svg_open(out, spec.canvas);
  const Canvas c{spec.canvas, spec.scale};
  for (const DiagramWheel& w : diagram.wheels) {
    out << "  <circle cx=\"" << fmt(c.px(0)) << "\" cy=\"" << fmt(c.py(0)) << "\" r=\""
        << fmt(spec.scale * w.radius) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  }
  const double r_max = diagram.wheels.empty() ? 1.0 : diagram.wheels.back().radius;
  for (const DiagramRay& ray : diagram.rays) {
    const complexd tip = std::polar(r_max, ray.angle);
    out << "  <line x1=\"" << fmt(c.px(0)) << "\" y1=\"" << fmt(c.py(0)) << "\" x2=\""
        << fmt(c.px(tip.real())) << "\" y2=\"" << fmt(c.py(tip.imag()))
        << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const DiagramPoint& p : diagram.points) {
    const int cls = p.sources.empty() ? 1 : particle_class(diagram.n, p.sources.front()).k;
    svg_point(out, c, p.position, spec.point_radius, spec.stroke_for_class(cls));
    if (spec.labels) {
      std::string text;
      for (size_t i = 0; i < p.sources.size(); ++i)
        text += (i ? "|" : "") + p.sources[i].label();
      svg_label(out, c, p.position, text, 6.0);
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_polytope(const SolitonGraph& graph, const RenderSpec& spec) {
  std::ostringstream out;
  svg_open(out, spec.canvas);
  const Canvas c{spec.canvas, spec.scale};
  for (const SolitonEdge& e : graph.edges) {
    const complexd a = graph.vertices[e.a].position;
    const complexd b = graph.vertices[e.b].position;
    out << "  <line x1=\"" << fmt(c.px(a.real())) << "\" y1=\"" << fmt(c.py(a.imag()))
        << "\" x2=\"" << fmt(c.px(b.real())) << "\" y2=\"" << fmt(c.py(b.imag()))
        << "\" stroke=\"" << spec.stroke_for_class(e.particle) << "\" stroke-opacity=\"0.45\"/>\n";
  }
  for (const auto& cluster : merged_positions(graph)) {
    const complexd pos = graph.vertices[cluster.front()].position;
    svg_point(out, c, pos, spec.point_radius, "#000000");
    if (spec.labels) {
      std::string text;
      for (size_t i = 0; i < cluster.size(); ++i)
        text += (i ? "|" : "") + weight_label(graph.n, graph.vertices[cluster[i]].weight);
      svg_label(out, c, pos, text, 6.0);
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string csv_solution(const RadialSolution& sol) {
  std::ostringstream out;
  out << "x";
  for (int i = 0; i <= sol.params.n; ++i) out << ",w_" << i;
  out << "\n";
  for (int j = 0; j < sol.grid.count; ++j) {
    out << fmt_full(sol.grid.x(j));
    for (int i = 0; i <= sol.params.n; ++i) out << "," << fmt_full(sol.w(j, i));
    out << "\n";
  }
  return out.str();
}

std::string template_name(FitTemplate templ) {
  return templ == FitTemplate::leading ? "f" : "bessel";
}

FitTemplate template_from_name(const std::string& name) {
  if (name == "f") return FitTemplate::leading;
  if (name == "bessel") return FitTemplate::bessel;
  throw std::invalid_argument("template must be one of: f, bessel");
}

}  // namespace ttoda
