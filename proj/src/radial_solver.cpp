#include "ttoda/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace ttoda {

namespace {

constexpr double kPi = std::numbers::pi;

int reduced_count(int n) { return (n + 1) / 2; }

/// softminus(u) = -ln(1 + e^{-u}): interpolates u (u -> -inf) to 0 (u -> inf).
double softminus(double u) {
  return u < 0.0 ? u - std::log1p(std::exp(u)) : -std::log1p(std::exp(-u));
}

/// Expand reduced components v_0..v_{q-1} to the full anti-symmetric w.
void expand(int n, const Eigen::VectorXd& v, std::vector<double>& w) {
  const int q = reduced_count(n);
  w.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (i < q)
      w[i] = v(i);
    else if (2 * i == n)
      w[i] = 0.0;
    else
      w[i] = -v(n - i);
  }
}

/// d(R_full)/d(w_full) at w; rows i, columns l.
Eigen::MatrixXd rhs_jacobian_full(int n, const std::vector<double>& w) {
  const int dim = n + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const int ip = (i + 1) % dim;
    const int im = (i + dim - 1) % dim;
    const double A = std::exp(2.0 * (w[ip] - w[i]));
    const double B = std::exp(2.0 * (w[i] - w[im]));
    J(i, ip) += -2.0 * A;
    J(i, i) += 2.0 * A + 2.0 * B;
    J(i, i) += 0.0;
    J(i, im) += -2.0 * B;
  }
  return J;
}

/// Fold a full-space RHS Jacobian to reduced coordinates.
Eigen::MatrixXd fold_jacobian(int n, const Eigen::MatrixXd& J_full) {
  const int q = reduced_count(n);
  Eigen::MatrixXd J(q, q);
  for (int p = 0; p < q; ++p)
    for (int r = 0; r < q; ++r)
      J(p, r) = J_full(p, r) - J_full(p, n - r);
  return J;
}

struct Discretization {
  int n;
  int q;
  int count;
  double h;
  const RadialGrid* grid;
  std::vector<double> m_reduced;

  int index(int j, int p) const { return j * q + p; }

  /// Residual of the reduced discretized system.
  Eigen::VectorXd residual(const Eigen::VectorXd& v) const {
    Eigen::VectorXd F(q * count);
    std::vector<double> w;
    Eigen::VectorXd vj(q);
    const double h2 = h * h;
    for (int j = 0; j < count; ++j) {
      for (int p = 0; p < q; ++p) vj(p) = v(index(j, p));
      expand(n, vj, w);
      const Eigen::VectorXd R = rhs_componentwise(n, w);
      const double factor = 2.0 * std::exp(2.0 * grid->u(j));
      for (int p = 0; p < q; ++p) {
        if (j == 0) {
          // ghost node w_{-1} = w_1 + 2h m_p keeps the stencil central
          F(index(j, p)) = (2.0 * v(index(1, p)) - 2.0 * v(index(0, p)) +
                            2.0 * h * m_reduced[p]) / h2 - factor * R(p);
        } else if (j == count - 1) {
          F(index(j, p)) = v(index(j, p));
        } else {
          F(index(j, p)) = (v(index(j - 1, p)) - 2.0 * v(index(j, p)) +
                            v(index(j + 1, p))) / h2 - factor * R(p);
        }
      }
    }
    return F;
  }

  Eigen::SparseMatrix<double> jacobian(const Eigen::VectorXd& v) const {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(count) * q * (q + 2));
    std::vector<double> w;
    Eigen::VectorXd vj(q);
    const double h2 = h * h;
    for (int j = 0; j < count; ++j) {
      if (j == count - 1) {
        for (int p = 0; p < q; ++p) trip.emplace_back(index(j, p), index(j, p), 1.0);
        continue;
      }
      for (int p = 0; p < q; ++p) vj(p) = v(index(j, p));
      expand(n, vj, w);
      const double factor = 2.0 * std::exp(2.0 * grid->u(j));
      const Eigen::MatrixXd dR = fold_jacobian(n, rhs_jacobian_full(n, w));
      for (int p = 0; p < q; ++p) {
        for (int r = 0; r < q; ++r) {
          double diag = -factor * dR(p, r);
          if (p == r) diag += -2.0 / h2;
          trip.emplace_back(index(j, p), index(j, r), diag);
        }
        if (j == 0) {
          trip.emplace_back(index(j, p), index(1, p), 2.0 / h2);
        } else {
          trip.emplace_back(index(j, p), index(j - 1, p), 1.0 / h2);
          trip.emplace_back(index(j, p), index(j + 1, p), 1.0 / h2);
        }
      }
    }
    Eigen::SparseMatrix<double> J(q * count, q * count);
    J.setFromTriplets(trip.begin(), trip.end());
    return J;
  }
};

struct NewtonResult {
  Eigen::VectorXd v;
  int iterations = 0;
  double residual_norm = 0.0;
  bool converged = false;
};

NewtonResult newton_solve(const Discretization& disc, Eigen::VectorXd v,
                          const SolverOptions& opts) {
  NewtonResult out;
  Eigen::VectorXd F = disc.residual(v);
  double norm = F.lpNorm<Eigen::Infinity>();
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (norm < opts.tol) break;
    lu.compute(disc.jacobian(v));
    if (lu.info() != Eigen::Success)
      throw std::runtime_error("radial solver: singular Jacobian");
    const Eigen::VectorXd delta = lu.solve(-F);
    // backtracking line search on the residual norm
    double alpha = 1.0;
    Eigen::VectorXd best_v = v + delta;
    Eigen::VectorXd best_F = disc.residual(best_v);
    double best_norm = best_F.lpNorm<Eigen::Infinity>();
    while (best_norm > norm && alpha > 1.0 / 64.0) {
      alpha *= 0.5;
      Eigen::VectorXd trial = v + alpha * delta;
      Eigen::VectorXd Ft = disc.residual(trial);
      const double nt = Ft.lpNorm<Eigen::Infinity>();
      if (nt < best_norm) {
        best_v = std::move(trial);
        best_F = std::move(Ft);
        best_norm = nt;
      }
    }
    v = std::move(best_v);
    F = std::move(best_F);
    norm = best_norm;
    out.iterations = it + 1;
  }
  out.v = std::move(v);
  out.residual_norm = norm;
  out.converged = norm < opts.tol;
  return out;
}

Eigen::VectorXd initial_guess(const Discretization& disc) {
  Eigen::VectorXd v(disc.q * disc.count);
  for (int j = 0; j < disc.count; ++j) {
    const double s = softminus(disc.grid->u(j));
    for (int p = 0; p < disc.q; ++p) v(disc.index(j, p)) = -disc.m_reduced[p] * s;
  }
  return v;
}

double boundary_gap(const TodaParams& params) {
  double g = params.m[0] - params.m[params.n];
  for (int i = 0; i < params.n; ++i) g = std::max(g, params.m[i + 1] - params.m[i]);
  return g;
}

}  // namespace

RadialGrid RadialGrid::from_x(double x_min, double x_max, int count) {
  if (!(x_min > 0.0) || !(x_max > x_min))
    throw std::invalid_argument("need 0 < x_min < x_max");
  if (count < 16) throw std::invalid_argument("grid must have at least 16 nodes");
  return RadialGrid{std::log(x_min), std::log(x_max), count};
}

double RadialGrid::x(int j) const { return std::exp(u(j)); }

Eigen::VectorXd rhs_componentwise(int n, const std::vector<double>& w) {
  if (static_cast<int>(w.size()) != n + 1)
    throw std::invalid_argument("w must have n+1 entries");
  Eigen::VectorXd R(n + 1);
  for (int i = 0; i <= n; ++i) {
    const int ip = (i + 1) % (n + 1);
    const int im = (i + n) % (n + 1);
    R(i) = -std::exp(2.0 * (w[ip] - w[i])) + std::exp(2.0 * (w[i] - w[im]));
  }
  return R;
}

Eigen::VectorXd rhs_commutator(int n, const std::vector<double>& w) {
  const Eigen::MatrixXd W = build_W(n, w);
  return (W.transpose() * W - W * W.transpose()).diagonal();
}

RadialSolution solve_radial(const TodaParams& params, const RadialGrid& grid,
                            const SolverOptions& opts) {
  const int n = params.n;
  if (grid.count < 16 || !(grid.u_min < grid.u_max))
    throw std::invalid_argument("invalid grid");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  // revalidate the region
  (void)params_from_m(n, params.m, params.N);

  RadialSolution sol;
  sol.params = params;
  sol.grid = grid;
  sol.w = Eigen::MatrixXd::Zero(grid.count, n + 1);

  double m_max = 0.0;
  for (double mi : params.m) m_max = std::max(m_max, std::abs(mi));
  if (m_max < 1e-15) return sol;  // w = 0 solves the system exactly

  const int q = reduced_count(n);
  Discretization disc{n, q, grid.count, grid.spacing(), &grid, {}};
  disc.m_reduced.resize(q);

  std::vector<double> stages;
  if (opts.continuation && boundary_gap(params) >= 0.95)
    stages = {0.8, 1.0};
  else
    stages = {1.0};

  auto run = [&](const std::vector<double>& schedule) -> NewtonResult {
    NewtonResult result;
    Eigen::VectorXd v;
    for (size_t s = 0; s < schedule.size(); ++s) {
      for (int p = 0; p < q; ++p) disc.m_reduced[p] = schedule[s] * params.m[p];
      if (s == 0) v = initial_guess(disc);
      result = newton_solve(disc, std::move(v), opts);
      v = result.v;
      if (!result.converged) break;
    }
    return result;
  };

  NewtonResult result = run(stages);
  if (!result.converged && opts.continuation && stages.size() == 1)
    result = run({0.25, 0.5, 0.75, 0.9, 1.0});
  if (!result.converged)
    throw std::runtime_error("radial solver did not converge; residual " +
                             std::to_string(result.residual_norm));

  sol.newton_iterations = result.iterations;
  sol.max_residual = result.residual_norm;
  std::vector<double> w_full;
  Eigen::VectorXd vj(q);
  for (int j = 0; j < grid.count; ++j) {
    for (int p = 0; p < q; ++p) vj(p) = result.v(disc.index(j, p));
    expand(n, vj, w_full);
    for (int i = 0; i <= n; ++i) sol.w(j, i) = w_full[i];
  }
  const double h = grid.spacing();
  for (int p = 0; p < q; ++p) {
    const double flux = (-3.0 * sol.w(0, p) + 4.0 * sol.w(1, p) - sol.w(2, p)) / (2.0 * h);
    sol.boundary_flux_error = std::max(sol.boundary_flux_error, std::abs(flux + params.m[p]));
  }
  return sol;
}

ResidualReport residual(const RadialSolution& sol) {
  const int n = sol.params.n;
  const int count = sol.grid.count;
  const double h2 = sol.grid.spacing() * sol.grid.spacing();
  ResidualReport report;
  report.componentwise.resize(count - 2, n + 1);
  report.via_commutator.resize(count - 2, n + 1);
  std::vector<double> w(n + 1);
  for (int j = 1; j < count - 1; ++j) {
    for (int i = 0; i <= n; ++i) w[i] = sol.w(j, i);
    const Eigen::VectorXd R1 = rhs_componentwise(n, w);
    const Eigen::VectorXd R2 = rhs_commutator(n, w);
    const double factor = 2.0 * std::exp(2.0 * sol.grid.u(j));
    for (int i = 0; i <= n; ++i) {
      const double second_diff = (sol.w(j - 1, i) - 2.0 * sol.w(j, i) + sol.w(j + 1, i)) / h2;
      report.componentwise(j - 1, i) = second_diff - factor * R1(i);
      report.via_commutator(j - 1, i) = second_diff - factor * R2(i);
      report.route_disagreement = std::max(report.route_disagreement,
                                           factor * std::abs(R1(i) - R2(i)));
      report.max_abs = std::max(report.max_abs, std::abs(report.componentwise(j - 1, i)));
    }
  }
  return report;
}

Eigen::MatrixXd asymptotic_components(const RadialSolution& sol) {
  const int n = sol.params.n;
  const int classes = (n + 1) / 2;
  const int p_max = (n - 1) / 2;
  Eigen::MatrixXd u(sol.grid.count, classes);
  for (int j = 0; j < sol.grid.count; ++j) {
    for (int k = 1; k <= classes; ++k) {
      double sum = 0.0;
      for (int p = 0; p <= p_max; ++p)
        sum += sol.w(j, p) * std::sin((2.0 * p + 1.0) * k * kPi / (n + 1));
      u(j, k - 1) = -4.0 / (n + 1) * sum;
    }
  }
  return u;
}

double fit_template_value(FitTemplate templ, double y) {
  if (!(y > 0.0)) throw std::invalid_argument("template argument must be positive");
  switch (templ) {
    case FitTemplate::leading:
      return 0.5 / std::sqrt(kPi * y) * std::exp(-2.0 * y);
    case FitTemplate::bessel:
      return std::cyl_bessel_k(0.0, 2.0 * y) / kPi;
  }
  throw std::logic_error("unknown template");
}

AsymptoticFit extract_stokes(const RadialSolution& sol, double x_a, double x_b,
                             FitTemplate templ) {
  const int n = sol.params.n;
  if (!(x_a < x_b)) throw std::invalid_argument("window must have x_a < x_b");
  if (x_a < sol.grid.x(0) - 1e-12 || x_b > sol.grid.x(sol.grid.count - 1) + 1e-12)
    throw std::invalid_argument("fit window must lie inside the grid");
  std::vector<int> nodes;
  for (int j = 0; j < sol.grid.count; ++j) {
    const double x = sol.grid.x(j);
    if (x >= x_a && x <= x_b) nodes.push_back(j);
  }
  if (nodes.size() < 2) throw std::invalid_argument("fit window contains fewer than 2 nodes");

  const Eigen::MatrixXd u = asymptotic_components(sol);
  const std::vector<double> masses = particle_masses(n);
  AsymptoticFit fit;
  fit.templ = templ;
  const int classes = (n + 1) / 2;
  for (int k = 1; k <= classes; ++k) {
    double sum = 0.0, lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int j : nodes) {
      const double ratio = u(j, k - 1) / fit_template_value(templ, masses[k - 1] * sol.grid.x(j));
      sum += ratio;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double mean = sum / nodes.size();
    fit.s_hat.push_back(mean);
    fit.windows.emplace_back(x_a, x_b);
    fit.spread.push_back((hi - lo) / std::max(std::abs(mean), 1e-300));
    fit.sign.push_back(mean > 0.0 ? 1 : (mean < 0.0 ? -1 : 0));
  }
  return fit;
}

AsymptoticsReport compare_fit(const RadialSolution& sol, double x_a, double x_b,
                              FitTemplate templ, double rel_tol, double abs_tol) {
  const TodaParams& params = sol.params;
  AsymptoticsReport report;
  report.fit = extract_stokes(sol, x_a, x_b, templ);
  report.newton_iterations = sol.newton_iterations;
  report.max_residual = sol.max_residual;
  const StokesVector S = stokes_from_m(params);
  report.passed = true;
  for (int k = 1; k <= (params.n + 1) / 2; ++k) {
    VerifyRow row;
    row.k = k;
    row.s_hat = report.fit.s_hat[k - 1];
    row.s_closed = S.s[k - 1].real();
    row.relative = std::abs(row.s_closed) > 1e-8;
    row.error = row.relative ? std::abs(row.s_hat - row.s_closed) / std::abs(row.s_closed)
                             : std::abs(row.s_hat);
    row.pass = row.relative ? row.error < rel_tol : row.error < abs_tol;
    report.passed = report.passed && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

AsymptoticsReport verify_asymptotics(const TodaParams& params, const RadialGrid& grid,
                                     double x_a, double x_b, FitTemplate templ,
                                     double rel_tol, double abs_tol,
                                     const SolverOptions& opts) {
  return compare_fit(solve_radial(params, grid, opts), x_a, x_b, templ, rel_tol, abs_tol);
}

}  // namespace ttoda
