#ifndef TTODA_PARAMETERS_STOKES_HPP
#define TTODA_PARAMETERS_STOKES_HPP

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ttoda/root_geometry.hpp"

namespace ttoda {

/// Parameters of a global solution: asymptotic exponents m at t = 0,
/// holomorphic-data exponents k, and the scale N = n+1 + sum k_i > 0.
/// The two parametrizations are tied by 1 - m_i + m_{i-1} = ((n+1)/N)(k_i + 1)
/// with cyclic indices (m_{-1} = m_n).
struct TodaParams {
  int n = 0;
  std::vector<double> m;  // n+1 entries, m_i + m_{n-i} = 0
  std::vector<double> k;  // n+1 entries, k_i >= -1, k_i = k_{n-i+1} for i >= 1
  double N = 0.0;
};

/// Build params from m. The m -> k direction is one-parameter ambiguous
/// (a z-coordinate rescaling), so N is explicit; omitted it defaults to
/// N = n+1, which makes t = z.
TodaParams params_from_m(int n, const std::vector<double>& m,
                         std::optional<double> N = std::nullopt);

/// Build params from k; N and m are then determined.
TodaParams params_from_k(int n, const std::vector<double>& k);

/// m = -x0 = (-n/2, ..., n/2): the projective-space point.
std::vector<double> m_projective(int n);

/// Canonical Stokes data s_1..s_n with the symmetry s_k = s_{n+1-k}.
struct StokesVector {
  int n = 0;
  std::vector<complexd> s;  // s[k-1] = s_k

  /// Validates length and the s_k = s_{n+1-k} symmetry.
  static StokesVector symmetric(int n, std::vector<complexd> s, double tol = 1e-12);

  complexd at(int k) const { return s.at(k - 1); }
};

/// Stokes data of the solution with exponents m: s_k is the k-th
/// elementary symmetric function of z_j = exp((2 m_j + n - 2j) pi i/(n+1)).
/// The value is recomputed as tr of the k-th exterior power of diag(z);
/// the two evaluations must agree to cross_tol. Imaginary parts below
/// imag_tol are dropped.
StokesVector stokes_from_m(const TodaParams& params, double imag_tol = 1e-10,
                           double cross_tol = 1e-10);

/// s_k = C(n+1, k), the Stokes data of the m = -x0 solution. Exact integers.
StokesVector binomial_stokes(int n);

/// Monodromy data M = C^Gamma(S): the companion matrix of
/// z^{n+1} - s_1 z^n + s_2 z^{n-1} - ... + (-1)^n s_n z + (-1)^{n+1}.
/// det M = 1 and M is regular (nonderogatory) by construction.
Eigen::MatrixXcd steinberg_monodromy(const StokesVector& S);

/// Stokes factor for the singular direction phi: exp(sum over roots
/// projecting to the ray of s_{[beta]} e_beta) in the apposition frame
/// e_beta = Omega E_{i,j} Omega^{-1}. phi must be a ray angle of
/// coxeter_diagram(n, 1). The result is unipotent.
Eigen::MatrixXcd stokes_factor(int n, const StokesVector& S, double ray_angle);

/// Cyclic matrix W with entries e^{w_{i+1}-w_i} (superdiagonal, wrapping);
/// diag([W^T, W]) is the right-hand side of the radial system.
/// Requires w_i + w_{n-i} = 0.
Eigen::MatrixXd build_W(int n, const std::vector<double>& w);

}  // namespace ttoda

#endif
