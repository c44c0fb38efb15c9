#include "ttoda/parameters_stokes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "ttoda/representation_functor.hpp"

namespace ttoda {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRegionTol = 1e-12;

void check_m_region(int n, const std::vector<double>& m) {
  if (static_cast<int>(m.size()) != n + 1)
    throw std::invalid_argument("m must have n+1 entries");
  for (int i = 0; i <= n; ++i) {
    if (std::abs(m[i] + m[n - i]) > kRegionTol)
      throw std::invalid_argument("anti-symmetry violated: m_" + std::to_string(i) +
                                  " + m_" + std::to_string(n - i) + " = " +
                                  std::to_string(m[i] + m[n - i]) + " != 0");
  }
  for (int i = 0; i < n; ++i) {
    if (m[i + 1] - m[i] > 1.0 + kRegionTol)
      throw std::invalid_argument("region violated: m_" + std::to_string(i + 1) +
                                  " - m_" + std::to_string(i) + " = " +
                                  std::to_string(m[i + 1] - m[i]) + " > 1");
  }
  if (1.0 - m[0] + m[n] < -kRegionTol)
    throw std::invalid_argument("region violated: 1 - m_0 + m_n = " +
                                std::to_string(1.0 - m[0] + m[n]) + " < 0");
}

void check_k_vector(int n, const std::vector<double>& k) {
  if (static_cast<int>(k.size()) != n + 1)
    throw std::invalid_argument("k must have n+1 entries");
  for (int i = 0; i <= n; ++i)
    if (k[i] < -1.0 - kRegionTol)
      throw std::invalid_argument("k_" + std::to_string(i) + " = " +
                                  std::to_string(k[i]) + " < -1");
  for (int i = 1; i <= n; ++i)
    if (std::abs(k[i] - k[n - i + 1]) > kRegionTol)
      throw std::invalid_argument("symmetry violated: k_" + std::to_string(i) +
                                  " != k_" + std::to_string(n - i + 1));
}

}  // namespace

std::vector<double> m_projective(int n) {
  std::vector<double> m(n + 1);
  for (int i = 0; i <= n; ++i) m[i] = -0.5 * n + i;
  return m;
}

TodaParams params_from_m(int n, const std::vector<double>& m, std::optional<double> N_opt) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  check_m_region(n, m);
  const double N = N_opt.value_or(static_cast<double>(n + 1));
  if (!(N > 0.0)) throw std::invalid_argument("N must be > 0");

  TodaParams p;
  p.n = n;
  p.m = m;
  p.N = N;
  p.k.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double prev = (i == 0) ? m[n] : m[i - 1];
    p.k[i] = N / (n + 1) * (1.0 - m[i] + prev) - 1.0;
  }
  check_k_vector(n, p.k);
  return p;
}

TodaParams params_from_k(int n, const std::vector<double>& k) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  check_k_vector(n, k);
  double N = n + 1;
  for (double ki : k) N += ki;
  if (!(N > kRegionTol))
    throw std::invalid_argument("N = n+1 + sum k_i must be > 0 (all k_i = -1 is excluded)");

  TodaParams p;
  p.n = n;
  p.k = k;
  p.N = N;
  p.m.resize(n + 1);
  // m_i - m_{i-1} = 1 - ((n+1)/N)(k_i + 1); anchor by anti-symmetry
  std::vector<double> step(n + 1, 0.0);
  double total = 0.0;
  for (int i = 1; i <= n; ++i) {
    step[i] = 1.0 - (n + 1) / N * (k[i] + 1.0);
    total += step[i];
  }
  p.m[0] = -0.5 * total;
  for (int i = 1; i <= n; ++i) p.m[i] = p.m[i - 1] + step[i];
  check_m_region(n, p.m);
  return p;
}

StokesVector StokesVector::symmetric(int n, std::vector<complexd> s, double tol) {
  if (n < 1 || static_cast<int>(s.size()) != n)
    throw std::invalid_argument("Stokes vector must have n entries");
  for (int k = 1; k <= n; ++k)
    if (std::abs(s[k - 1] - s[n - k]) > tol)
      throw std::invalid_argument("Stokes symmetry s_k = s_{n+1-k} violated at k = " +
                                  std::to_string(k));
  return StokesVector{n, std::move(s)};
}

StokesVector stokes_from_m(const TodaParams& params, double imag_tol, double cross_tol) {
  const int n = params.n;
  check_m_region(n, params.m);

  Eigen::VectorXcd z(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double arg = (2.0 * params.m[j] + n - 2.0 * j) * kPi / (n + 1);
    z(j) = std::polar(1.0, arg);
  }

  // route 1: coefficients of prod_j (X + z_j)
  std::vector<complexd> coeff(n + 2, complexd(0.0));
  coeff[0] = 1.0;
  for (int j = 0; j <= n; ++j)
    for (int d = j + 1; d >= 1; --d) coeff[d] += z(j) * coeff[d - 1];

  // route 2: trace of the k-th exterior power of diag(z)
  const Eigen::MatrixXcd dz = z.asDiagonal();
  StokesVector S;
  S.n = n;
  S.s.resize(n);
  for (int k = 1; k <= n; ++k) {
    const complexd e_k = coeff[k];
    const complexd tr = ext_power_group(dz, k).trace();
    if (std::abs(e_k - tr) > cross_tol)
      throw std::runtime_error("stokes_from_m: symmetric-function and exterior-power "
                               "evaluations disagree at k = " + std::to_string(k));
    complexd v = e_k;
    if (std::abs(v.imag()) < imag_tol) v = complexd(v.real(), 0.0);
    S.s[k - 1] = v;
  }
  // enforce s_k = s_{n+1-k} exactly (z is conjugation-closed with product 1)
  for (int k = 1; 2 * k <= n; ++k) S.s[n - k] = S.s[k - 1];
  return S;
}

StokesVector binomial_stokes(int n) {
  return stokes_from_m(params_from_m(n, m_projective(n)));
}

Eigen::MatrixXcd steinberg_monodromy(const StokesVector& S) {
  const int n = S.n;
  if (n < 1 || static_cast<int>(S.s.size()) != n)
    throw std::invalid_argument("invalid Stokes vector");
  const int dim = n + 1;
  // char poly z^{n+1} + sum_k (-1)^k s_k z^{n+1-k} + (-1)^{n+1};
  // c[d] = coefficient of z^d
  std::vector<complexd> c(dim);
  for (int k = 1; k <= n; ++k)
    c[dim - k] = ((k % 2 == 0) ? 1.0 : -1.0) * S.s[k - 1];
  c[0] = (dim % 2 == 0) ? 1.0 : -1.0;

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  for (int r = 1; r < dim; ++r) M(r, r - 1) = 1.0;
  for (int r = 0; r < dim; ++r) M(r, dim - 1) = -c[r];
  return M;
}

Eigen::MatrixXcd stokes_factor(int n, const StokesVector& S, double ray_angle) {
  if (S.n != n || static_cast<int>(S.s.size()) != n)
    throw std::invalid_argument("Stokes vector length does not match n");
  // the coefficient rule s_beta = s_{|i-j|} needs s_d = s_{n+1-d}
  (void)StokesVector::symmetric(n, S.s, 1e-9);
  const CoxeterDiagram diagram = coxeter_diagram(n, 1);
  const double phi = canonical_angle(ray_angle);
  const DiagramRay* ray = nullptr;
  for (const DiagramRay& r : diagram.rays)
    if (std::abs(r.angle - phi) < kAngleTol) { ray = &r; break; }
  if (!ray)
    throw std::invalid_argument("angle " + std::to_string(ray_angle) +
                                " is not a singular direction for n = " + std::to_string(n));

  const Eigen::MatrixXcd omega = vandermonde_omega(n);
  const Eigen::MatrixXcd omega_inv = vandermonde_omega_inverse(n);
  Eigen::MatrixXcd arg = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int idx : ray->points) {
    for (const RootA& root : diagram.points[idx].sources) {
      const int cls = particle_class(n, root).k;
      Eigen::MatrixXcd e_root = Eigen::MatrixXcd::Zero(n + 1, n + 1);
      e_root(root.i, root.j) = 1.0;
      arg += S.s[cls - 1] * (omega * e_root * omega_inv);
    }
  }
  const Eigen::MatrixXcd Q = arg.exp();
  return Q;
}

Eigen::MatrixXd build_W(int n, const std::vector<double>& w) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  if (static_cast<int>(w.size()) != n + 1)
    throw std::invalid_argument("w must have n+1 entries");
  for (int i = 0; i <= n; ++i)
    if (std::abs(w[i] + w[n - i]) > 1e-12)
      throw std::invalid_argument("w is not anti-symmetric: w_" + std::to_string(i) +
                                  " + w_" + std::to_string(n - i) + " != 0");
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i < n; ++i) W(i, i + 1) = std::exp(w[i + 1] - w[i]);
  W(n, 0) = std::exp(w[0] - w[n]);
  return W;
}

}  // namespace ttoda
