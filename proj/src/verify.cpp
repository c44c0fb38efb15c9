#include "ttoda/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "ttoda/parameters_stokes.hpp"
#include "ttoda/radial_solver.hpp"
#include "ttoda/representation_functor.hpp"
#include "ttoda/root_geometry.hpp"

namespace ttoda {

namespace {

long long binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

StokesVector random_symmetric_stokes(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<complexd> s(n);
  for (int k = 1; 2 * k <= n + 1; ++k) {
    if (k > n) break;
    const complexd v(dist(rng), dist(rng));
    s[k - 1] = v;
    s[n - k] = v;
  }
  return StokesVector{n, std::move(s)};
}

CheckResult check_binomial_stokes() {
  CheckResult result{"binomial-stokes", true, ""};
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const StokesVector S = binomial_stokes(n);
    for (int k = 1; k <= n; ++k)
      worst = std::max(worst, std::abs(S.s[k - 1] - complexd(binom(n + 1, k), 0.0)));
  }
  result.passed = worst < 1e-10;
  std::ostringstream msg;
  msg << "n=1..8, max |s_k - C(n+1,k)| = " << worst;
  result.detail = msg.str();
  return result;
}

CheckResult check_cross_section(std::uint64_t seed) {
  CheckResult result{"cross-section", true, ""};
  std::mt19937_64 rng(seed);
  double worst_trace = 0.0, worst_charpoly = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const StokesVector S = random_symmetric_stokes(n, rng);
      const Eigen::MatrixXcd M = steinberg_monodromy(S);
      for (int k = 1; k <= n; ++k) {
        const complexd tr = ext_power_group(M, k).trace();
        worst_trace = std::max(worst_trace, std::abs(tr - S.s[k - 1]));
      }
      // char poly pattern via the eigenvalues of M
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
      std::vector<complexd> coeff(n + 2, complexd(0.0));
      coeff[0] = 1.0;
      for (int j = 0; j <= n; ++j)
        for (int d = j + 1; d >= 1; --d) coeff[d] += es.eigenvalues()(j) * coeff[d - 1];
      for (int k = 1; k <= n; ++k)
        worst_charpoly = std::max(worst_charpoly, std::abs(coeff[k] - S.s[k - 1]));
      worst_charpoly = std::max(worst_charpoly, std::abs(coeff[n + 1] - complexd(1.0, 0.0)));
    }
  }
  result.passed = worst_trace < 1e-8 && worst_charpoly < 1e-8;
  std::ostringstream msg;
  msg << "200 random S per n=1..6: max trace error " << worst_trace
      << ", max char-poly error " << worst_charpoly;
  result.detail = msg.str();
  return result;
}

CheckResult check_mass_spectrum() {
  CheckResult result{"mass-spectrum", true, ""};
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> expected;
    for (int k = 1; k <= n; ++k) {
      const double s = 2.0 * std::sin(k * std::numbers::pi / (n + 1));
      expected.push_back(s * s);
    }
    std::sort(expected.begin(), expected.end());
    const std::vector<double> got = mass_operator_spectrum(n);
    for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(got[k] - expected[k]));
  }
  result.passed = worst < 1e-10;
  std::ostringstream msg;
  msg << "n=1..8, max |eig - 4 sin^2(k pi/(n+1))| = " << worst;
  result.detail = msg.str();
  return result;
}

CheckResult check_offshell_identity(std::uint64_t seed) {
  CheckResult result{"offshell-identity", true, ""};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> w(n + 1, 0.0);
      for (int i = 0; 2 * i < n; ++i) {
        w[i] = dist(rng);
        w[n - i] = -w[i];
      }
      const Eigen::VectorXd a = rhs_componentwise(n, w);
      const Eigen::VectorXd b = rhs_commutator(n, w);
      worst = std::max(worst, (a - b).lpNorm<Eigen::Infinity>());
    }
  }
  result.passed = worst < 1e-12;
  std::ostringstream msg;
  msg << "100 random anti-symmetric w per n=1..6: max |R_i - diag([W^T,W])_i| = " << worst;
  result.detail = msg.str();
  return result;
}

}  // namespace

std::vector<CheckResult> verify_algebra(std::uint64_t seed) {
  return {check_binomial_stokes(), check_cross_section(seed), check_mass_spectrum(),
          check_offshell_identity(seed)};
}

std::vector<CheckResult> verify_satake() {
  std::vector<CheckResult> checks;
  for (int n = 1; n <= 6; ++n) {
    const StokesVector S = binomial_stokes(n);
    for (int k = 1; k <= n; ++k) {
      const SatakeReport report = satake_check(n, k, S);
      std::ostringstream name;
      name << "satake-n" << n << "-k" << k;
      checks.push_back({name.str(), report.passed, report.message});
    }
  }
  return checks;
}

std::vector<CheckResult> verify_asymptotics_suite() {
  std::vector<CheckResult> checks;
  const RadialGrid grid = RadialGrid::from_x(1e-3, 8.0, 2000);

  auto run = [&](const std::string& name, int n, const std::vector<double>& m,
                 double x_a, double x_b) {
    CheckResult result{name, false, ""};
    try {
      const TodaParams params = params_from_m(n, m);
      const AsymptoticsReport report =
          verify_asymptotics(params, grid, x_a, x_b, FitTemplate::bessel);
      result.passed = report.passed;
      std::ostringstream msg;
      for (const VerifyRow& row : report.rows) {
        msg << "s_" << row.k << ": fit " << row.s_hat << " vs closed " << row.s_closed
            << " (" << (row.relative ? "rel " : "abs ") << row.error << "); ";
      }
      msg << "newton " << report.newton_iterations << ", residual " << report.max_residual;
      result.detail = msg.str();
    } catch (const std::exception& e) {
      result.detail = e.what();
    }
    return result;
  };

  checks.push_back(run("asymptotics-zero", 2, {0.0, 0.0, 0.0}, 1.5, 3.5));
  checks.push_back(run("asymptotics-cp1", 1, {-0.5, 0.5}, 1.5, 3.5));
  checks.push_back(run("asymptotics-n2", 2, {-0.5, 0.0, 0.5}, 1.5, 3.5));
  checks.push_back(run("asymptotics-n3", 3, {-0.9, -0.3, 0.3, 0.9}, 1.5, 3.5));
  return checks;
}

std::vector<CheckResult> run_verify(const std::string& suite) {
  std::vector<CheckResult> checks;
  if (suite == "algebra" || suite == "all") {
    auto c = verify_algebra();
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (suite == "satake" || suite == "all") {
    auto c = verify_satake();
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (suite == "asymptotics" || suite == "all") {
    auto c = verify_asymptotics_suite();
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (checks.empty())
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected satake, asymptotics, algebra or all)");
  std::sort(checks.begin(), checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return checks;
}

}  // namespace ttoda
