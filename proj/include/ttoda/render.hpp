#ifndef TTODA_RENDER_HPP
#define TTODA_RENDER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ttoda/radial_solver.hpp"
#include "ttoda/representation_functor.hpp"
#include "ttoda/root_geometry.hpp"

namespace ttoda {

struct RenderSpec {
  int canvas = 640;            // px, square
  double scale = 110.0;        // px per mass-1 radius
  double point_radius = 4.0;   // px
  bool labels = true;
  std::vector<std::string> class_strokes = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  const std::string& stroke_for_class(int k) const {
    return class_strokes[(k - 1) % class_strokes.size()];
  }
};

nlohmann::json json_complex(const complexd& z);
nlohmann::json json_matrix(const Eigen::MatrixXcd& M);

nlohmann::json json_coxeter(const CoxeterDiagram& diagram);

/// Stokes factors Q_phi for every singular direction, ordered by angle,
/// plus their ordered product. The product's relation to the monodromy is
/// exposed for inspection only; nothing is asserted about it.
nlohmann::json json_stokes_factors(int n, const StokesVector& S);
nlohmann::json json_polytope(const SolitonGraph& graph);
nlohmann::json json_stokes(const TodaParams& params, const StokesVector& S);
nlohmann::json json_fit_report(const TodaParams& params, const RadialGrid& grid,
                               double x_a, double x_b, const AsymptoticsReport& report);

std::string svg_coxeter(const CoxeterDiagram& diagram, const RenderSpec& spec = {});
std::string svg_polytope(const SolitonGraph& graph, const RenderSpec& spec = {});

/// Columns x, w_0..w_n; one row per grid node.
std::string csv_solution(const RadialSolution& sol);

std::string template_name(FitTemplate templ);
FitTemplate template_from_name(const std::string& name);

}  // namespace ttoda

#endif
