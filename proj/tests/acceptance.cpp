// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ttoda/parameters_stokes.hpp"
#include "ttoda/radial_solver.hpp"
#include "ttoda/representation_functor.hpp"
#include "ttoda/root_geometry.hpp"

using namespace ttoda;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long long pascal(int m, int k) {
  long long r = 1;
  k = std::min(k, m - k);
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

// 1. binomial Stokes data for m = -x0, n = 1..8
void criterion_binomials() {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const StokesVector S = stokes_from_m(params_from_m(n, m_projective(n)));
    for (int k = 1; k <= n; ++k)
      worst = std::max(worst, std::abs(S.s[k - 1] - complexd(pascal(n + 1, k), 0.0)));
  }
  std::ostringstream d;
  d << "max |s_k - C(n+1,k)| = " << worst;
  report(1, "binomial Stokes data, n = 1..8", worst < 1e-10, d.str());
}

// 2. Gr_3(C^6) worked example
void criterion_grassmannian() {
  bool pass = true;
  std::ostringstream d;

  const std::vector<double> masses = particle_masses(5);
  pass &= masses.size() == 3;
  pass &= std::abs(masses[0] - 1.0) < 1e-12;
  pass &= std::abs(masses[1] - std::sqrt(3.0)) < 1e-12;
  pass &= std::abs(masses[2] - 2.0) < 1e-12;

  const StokesVector S = binomial_stokes(5);
  pass &= S.s[0] == complexd(6.0, 0.0);
  pass &= S.s[1] == complexd(15.0, 0.0);
  pass &= S.s[2] == complexd(20.0, 0.0);

  const SolitonGraph g = soliton_graph(5, 3, S);
  const auto clusters = merged_positions(g);
  pass &= clusters.size() == 13;
  d << "masses (" << masses[0] << "," << masses[1] << "," << masses[2] << "), "
    << clusters.size() << " positions";

  int mod0 = 0, mod1 = 0, mod2 = 0;
  for (const auto& cluster : clusters) {
    const double r = std::abs(g.vertices[cluster.front()].position);
    if (r < 1e-9) {
      ++mod0;
      std::set<WeightIndexSet> weights;
      for (int v : cluster) weights.insert(g.vertices[v].weight);
      pass &= weights == std::set<WeightIndexSet>{{0, 2, 4}, {1, 3, 5}};
    } else if (std::abs(r - 1.0) < 1e-9) {
      ++mod1;
    } else if (std::abs(r - 2.0) < 1e-9) {
      ++mod2;
    }
  }
  pass &= mod0 == 1 && mod1 == 6 && mod2 == 6;

  auto vertex = [&](const WeightIndexSet& w) {
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
      if (g.vertices[v].weight == w) return v;
    return -1;
  };
  const int v025 = vertex({0, 2, 5}), v245 = vertex({2, 4, 5});
  const int v024 = vertex({0, 2, 4}), v135 = vertex({1, 3, 5}), v034 = vertex({0, 3, 4});
  bool edge_found = false;
  for (const SolitonEdge& e : g.edges) {
    if ((e.a == v025 && e.b == v245) || (e.a == v245 && e.b == v025)) {
      edge_found = true;
      pass &= e.particle == 2;
      pass &= std::abs(e.mass - std::sqrt(3.0)) < 1e-12;
      pass &= e.multiplicity == complexd(15.0, 0.0);
    }
    pass &= !((e.a == v024 && e.b == v135) || (e.a == v135 && e.b == v024));
    pass &= !((e.a == v034 && e.b == v245) || (e.a == v245 && e.b == v034));
  }
  pass &= edge_found;
  report(2, "Gr_3(C^6) masses, multiplicities, soliton graph", pass, d.str());
}

// 3. cross-section property on random symmetric Stokes vectors
void criterion_cross_section() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  double worst_trace = 0.0, worst_poly = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<complexd> s(n);
      for (int k = 1; 2 * k <= n + 1 && k <= n; ++k) {
        s[k - 1] = complexd(dist(rng), dist(rng));
        s[n - k] = s[k - 1];
      }
      const StokesVector S{n, s};
      const Eigen::MatrixXcd M = steinberg_monodromy(S);
      for (int k = 1; k <= n; ++k)
        worst_trace = std::max(worst_trace,
                               std::abs(ext_power_group(M, k).trace() - s[k - 1]));
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
      std::vector<complexd> coeff(n + 2, complexd(0.0));
      coeff[0] = 1.0;
      for (int j = 0; j <= n; ++j)
        for (int d = j + 1; d >= 1; --d) coeff[d] += es.eigenvalues()(j) * coeff[d - 1];
      for (int k = 1; k <= n; ++k)
        worst_poly = std::max(worst_poly, std::abs(coeff[k] - s[k - 1]));
      worst_poly = std::max(worst_poly, std::abs(coeff[n + 1] - complexd(1.0)));
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << "trace err " << worst_trace << ", char-poly err " << worst_poly << ", "
    << elapsed << " s";
  report(3, "cross-section: tr(wedge^k C(S)) = s_k, 200 random S, n = 1..6",
         worst_trace < 1e-8 && worst_poly < 1e-8 && elapsed < 5.0, d.str());
}

// 4. Satake spectrum property against a brute-force oracle
void criterion_satake_spectrum() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  auto lex_less = [](const complexd& a, const complexd& b) {
    if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  for (int n = 1; n <= 6; ++n) {
    const EtaConnection conn = cpn_connection(n);
    for (int k = 1; k <= n; ++k) {
      for (double z : {0.5, 1.0, 2.0}) {
        const Eigen::MatrixXcd eta = eta_matrix(conn, z).cast<complexd>();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> base(eta);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> lifted(ext_power_algebra(eta, k));
        std::vector<complexd> sums;
        for (const auto& subset : k_subsets(n + 1, k)) {
          complexd sum(0.0, 0.0);
          for (int i : subset) sum += base.eigenvalues()(i);
          sums.push_back(sum);
        }
        std::vector<complexd> spec(lifted.eigenvalues().data(),
                                   lifted.eigenvalues().data() + sums.size());
        std::sort(sums.begin(), sums.end(), lex_less);
        std::sort(spec.begin(), spec.end(), lex_less);
        for (size_t i = 0; i < sums.size(); ++i)
          worst = std::max(worst, std::abs(sums[i] - spec[i]));
      }
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream d;
  d << "max spectrum mismatch " << worst << ", " << elapsed << " s";
  report(4, "Satake spectra of wedge^k eta(z) vs k-fold sums, n <= 6",
         worst < 1e-8 && elapsed < 5.0, d.str());
}

// 5. numerical verification of the closed-form Stokes data
void criterion_numeric_theorem() {
  bool pass = true;
  std::ostringstream d;
  const RadialGrid grid = RadialGrid::from_x(1e-3, 8.0, 2000);

  {  // (a) m = 0
    const auto t0 = std::chrono::steady_clock::now();
    const TodaParams params = params_from_m(2, {0.0, 0.0, 0.0});
    const RadialSolution sol = solve_radial(params, grid);
    const AsymptoticFit fit = extract_stokes(sol, 1.5, 3.5);
    const double elapsed = seconds_since(t0);
    const bool ok = sol.w.norm() == 0.0 && std::abs(fit.s_hat[0]) < 1e-6 && elapsed < 10.0;
    pass &= ok;
    d << "(a) |s_hat| = " << std::abs(fit.s_hat[0]) << " [" << elapsed << " s] ";
  }
  {  // (b) n = 1, the projective point
    const auto t0 = std::chrono::steady_clock::now();
    const AsymptoticsReport r =
        verify_asymptotics(params_from_m(1, {-0.5, 0.5}), grid, 1.5, 3.5);
    const double elapsed = seconds_since(t0);
    const double rel = std::abs(r.rows[0].s_hat - 2.0) / 2.0;
    pass &= rel < 0.10 && elapsed < 10.0;
    d << "(b) s_hat = " << r.rows[0].s_hat << " rel " << rel << " [" << elapsed << " s] ";
  }
  {  // (c) n = 3
    const auto t0 = std::chrono::steady_clock::now();
    const AsymptoticsReport r =
        verify_asymptotics(params_from_m(3, {-0.9, -0.3, 0.3, 0.9}), grid, 1.5, 3.5);
    const double elapsed = seconds_since(t0);
    bool ok = elapsed < 10.0;
    d << "(c)";
    for (const VerifyRow& row : r.rows) {
      ok &= row.relative && row.error < 0.10;
      d << " s_" << row.k << " rel " << row.error;
    }
    pass &= ok;
    d << " [" << elapsed << " s] ";
  }
  {  // (d) n = 2
    const auto t0 = std::chrono::steady_clock::now();
    const AsymptoticsReport r =
        verify_asymptotics(params_from_m(2, {-0.5, 0.0, 0.5}), grid, 1.5, 3.5);
    const double elapsed = seconds_since(t0);
    pass &= r.rows[0].relative && r.rows[0].error < 0.10 && elapsed < 10.0;
    d << "(d) s_1 rel " << r.rows[0].error << " [" << elapsed << " s]";
  }
  report(5, "numerical tail fits vs closed-form Stokes data", pass, d.str());
}

// 6. linearization spectrum
void criterion_mass_spectrum() {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> expected;
    for (int k = 1; k <= n; ++k) {
      const double s = std::sin(k * kPi / (n + 1));
      expected.push_back(4.0 * s * s);
    }
    std::sort(expected.begin(), expected.end());
    const std::vector<double> got = mass_operator_spectrum(n);
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(got[i] - expected[i]));
  }
  std::ostringstream d;
  d << "max deviation " << worst;
  report(6, "mass operator spectrum equals {4 sin^2(k pi/(n+1))}, n <= 8",
         worst < 1e-10, d.str());
}

// 7. off-shell identity
void criterion_offshell() {
  std::mt19937_64 rng(777);
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
  std::ostringstream d;
  d << "max |R_i - diag([W^T,W])_i| = " << worst;
  report(7, "off-shell identity, 100 random anti-symmetric w per n <= 6",
         worst < 1e-12, d.str());
}

// 8. CLI determinism: identical invocations, identical bytes
void criterion_determinism() {
  namespace fs = std::filesystem;
  const std::string cli = TTODA_CLI_PATH;
  const fs::path dir = fs::temp_directory_path() / "ttoda_acceptance";
  fs::create_directories(dir);

  const std::vector<std::string> commands = {
      "stokes --n 5 --preset cpn",
      "stokes --n 3 --m=-0.9,-0.3,0.3,0.9",
      "coxeter --n 5 --format svg",
      "coxeter --n 3 --format json",
      "polytope --n 5 --k 3 --format json",
      "polytope --n 4 --k 2 --format svg",
  };
  bool pass = true;
  std::ostringstream d;
  for (size_t c = 0; c < commands.size(); ++c) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path file = dir / ("out_" + std::to_string(c) + "_" + std::to_string(run));
      const std::string cmd = cli + " " + commands[c] + " > " + file.string() + " 2>/dev/null";
      const int rc = std::system(cmd.c_str());
      if (rc != 0) { pass = false; d << "rc=" << rc << " for '" << commands[c] << "' "; }
      std::ifstream in(file, std::ios::binary);
      std::ostringstream content;
      content << in.rdbuf();
      outputs[run] = content.str();
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) {
      pass = false;
      d << "mismatch for '" << commands[c] << "' ";
    }
  }
  if (pass) d << commands.size() << " commands byte-identical across reruns";
  report(8, "CLI determinism", pass, d.str());
}

}  // namespace

int main() {
  criterion_binomials();
  criterion_grassmannian();
  criterion_cross_section();
  criterion_satake_spectrum();
  criterion_numeric_theorem();
  criterion_mass_spectrum();
  criterion_offshell();
  criterion_determinism();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
