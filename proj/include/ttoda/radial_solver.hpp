#ifndef TTODA_RADIAL_SOLVER_HPP
#define TTODA_RADIAL_SOLVER_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ttoda/parameters_stokes.hpp"

namespace ttoda {

/// Uniform grid in u = ln x.
struct RadialGrid {
  double u_min = 0.0;
  double u_max = 0.0;
  int count = 0;

  static RadialGrid from_x(double x_min, double x_max, int count);

  double spacing() const { return (u_max - u_min) / (count - 1); }
  double u(int j) const { return u_min + spacing() * j; }
  double x(int j) const;
};

struct SolverOptions {
  double tol = 1e-9;
  int max_iterations = 60;
  bool continuation = true;
};

struct RadialSolution {
  TodaParams params;
  RadialGrid grid;
  Eigen::MatrixXd w;  // count x (n+1), all components (anti-symmetry exact)
  int newton_iterations = 0;
  double max_residual = 0.0;
  double boundary_flux_error = 0.0;  // max_p |dw_p/du(u_min) + m_p|, one-sided stencil
};

/// Componentwise right-hand side R_i(w) = -e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})},
/// cyclic indices.
Eigen::VectorXd rhs_componentwise(int n, const std::vector<double>& w);

/// The same right-hand side as diag([W^T, W]) with W = build_W(n, w).
/// Agrees with rhs_componentwise off-shell, to machine precision.
Eigen::VectorXd rhs_commutator(int n, const std::vector<double>& w);

/// Solve w_uu = 2 e^{2u} R(w) with dw/du(u_min) = -m (Robin, ghost-node
/// elimination) and w(u_max) = 0 (Dirichlet), by Newton iteration on the
/// second-order central-difference discretization. Unknowns are reduced to
/// components 0..ceil(n/2)-1 by anti-symmetry. m near the region boundary is
/// reached by continuation from 0.8 m.
RadialSolution solve_radial(const TodaParams& params, const RadialGrid& grid,
                            const SolverOptions& opts = {});

struct ResidualReport {
  Eigen::MatrixXd componentwise;   // (count-2) x (n+1), interior nodes, via R_i
  Eigen::MatrixXd via_commutator;  // same via diag([W^T, W])
  double route_disagreement = 0.0;
  double max_abs = 0.0;
};

ResidualReport residual(const RadialSolution& sol);

/// Fourier-in-components tail observables
/// u_k(x_j) = -(4/(n+1)) sum_p w_p(x_j) sin((2p+1) k pi/(n+1)),
/// p = 0..floor((n-1)/2), one column per k = 1..floor((n+1)/2).
Eigen::MatrixXd asymptotic_components(const RadialSolution& sol);

enum class FitTemplate {
  leading,  // F(y) = (1/2)(pi y)^{-1/2} e^{-2y}
  bessel,   // (1/pi) K_0(2y), whose large-argument expansion is F
};

double fit_template_value(FitTemplate templ, double y);

struct AsymptoticFit {
  std::vector<double> s_hat;                        // per class k
  std::vector<std::pair<double, double>> windows;   // per-k [x_a, x_b]
  std::vector<double> spread;                       // relative spread over window
  std::vector<int> sign;                            // measured sign of the ratio
  FitTemplate templ = FitTemplate::bessel;
};

/// s_hat_k = mean over window nodes of u_k(x) / T(L_k x).
AsymptoticFit extract_stokes(const RadialSolution& sol, double x_a, double x_b,
                             FitTemplate templ = FitTemplate::bessel);

struct VerifyRow {
  int k = 0;
  double s_hat = 0.0;
  double s_closed = 0.0;
  double error = 0.0;  // relative when |s_closed| > 1e-8, absolute otherwise
  bool relative = true;
  bool pass = false;
};

struct AsymptoticsReport {
  std::vector<VerifyRow> rows;
  AsymptoticFit fit;
  int newton_iterations = 0;
  double max_residual = 0.0;
  bool passed = false;
};

/// Fit the tail of an existing solution and compare s_hat_k against
/// stokes_from_m(sol.params).
AsymptoticsReport compare_fit(const RadialSolution& sol, double x_a, double x_b,
                              FitTemplate templ = FitTemplate::bessel,
                              double rel_tol = 0.10, double abs_tol = 1e-6);

/// Solve, fit the tail, and compare s_hat_k against stokes_from_m(params).
AsymptoticsReport verify_asymptotics(const TodaParams& params, const RadialGrid& grid,
                                     double x_a, double x_b,
                                     FitTemplate templ = FitTemplate::bessel,
                                     double rel_tol = 0.10, double abs_tol = 1e-6,
                                     const SolverOptions& opts = {});

}  // namespace ttoda

#endif
