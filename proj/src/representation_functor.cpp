#include "ttoda/representation_functor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ttoda {

namespace {

constexpr double kPi = std::numbers::pi;

long long binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

/// Determinant by in-place Gaussian elimination with partial pivoting;
/// destroys the row-major k x k buffer.
complexd det_inplace(std::vector<complexd>& a, int k) {
  complexd det(1.0, 0.0);
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    double best = std::abs(a[col * k + col]);
    for (int r = col + 1; r < k; ++r) {
      const double v = std::abs(a[r * k + col]);
      if (v > best) { best = v; pivot = r; }
    }
    if (best == 0.0) return complexd(0.0, 0.0);
    if (pivot != col) {
      for (int c = col; c < k; ++c) std::swap(a[pivot * k + c], a[col * k + c]);
      det = -det;
    }
    const complexd d = a[col * k + col];
    det *= d;
    for (int r = col + 1; r < k; ++r) {
      const complexd f = a[r * k + col] / d;
      if (f == complexd(0.0, 0.0)) continue;
      for (int c = col + 1; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
    }
  }
  return det;
}

complexd zeta_pow(int n, int e) {
  const int h = n + 1;
  int r = e % h;
  if (r < 0) r += h;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == h) return {-1.0, 0.0};
  return std::polar(1.0, 2.0 * kPi * r / h);
}

bool lex_less_complex(const complexd& a, const complexd& b) {
  if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<WeightIndexSet> k_subsets(int m, int k) {
  if (k < 1 || k > m) throw std::invalid_argument("k must be in 1..m");
  std::vector<WeightIndexSet> subsets;
  subsets.reserve(static_cast<size_t>(binom(m, k)));
  WeightIndexSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    subsets.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[t] == m - k + t) --t;
    if (t < 0) break;
    ++cur[t];
    for (int i = t + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return subsets;
}

int subset_rank(int m, const WeightIndexSet& subset) {
  const int k = static_cast<int>(subset.size());
  long long rank = 0;
  int prev = -1;
  for (int t = 0; t < k; ++t) {
    for (int v = prev + 1; v < subset[t]; ++v) rank += binom(m - 1 - v, k - 1 - t);
    prev = subset[t];
  }
  return static_cast<int>(rank);
}

Eigen::MatrixXcd ext_power_group(const Eigen::MatrixXcd& A, int k) {
  const int m = static_cast<int>(A.rows());
  if (A.cols() != m) throw std::invalid_argument("matrix must be square");
  if (k < 1 || k > m) throw std::invalid_argument("k must be in 1..m");
  const auto subsets = k_subsets(m, k);
  const int dim = static_cast<int>(subsets.size());
  Eigen::MatrixXcd result(dim, dim);
  std::vector<complexd> buf(static_cast<size_t>(k) * k);
  for (int col = 0; col < dim; ++col) {
    const WeightIndexSet& J = subsets[col];
    for (int row = 0; row < dim; ++row) {
      const WeightIndexSet& I = subsets[row];
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) buf[r * k + c] = A(I[r], J[c]);
      result(row, col) = det_inplace(buf, k);
    }
  }
  return result;
}

Eigen::MatrixXcd ext_power_algebra(const Eigen::MatrixXcd& X, int k) {
  const int m = static_cast<int>(X.rows());
  if (X.cols() != m) throw std::invalid_argument("matrix must be square");
  if (k < 1 || k > m) throw std::invalid_argument("k must be in 1..m");
  const auto subsets = k_subsets(m, k);
  const int dim = static_cast<int>(subsets.size());
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<char> in_set(m);
  for (int col = 0; col < dim; ++col) {
    const WeightIndexSet& J = subsets[col];
    std::fill(in_set.begin(), in_set.end(), 0);
    for (int v : J) in_set[v] = 1;
    for (int t = 0; t < k; ++t) {
      result(col, col) += X(J[t], J[t]);
      for (int i = 0; i < m; ++i) {
        if (in_set[i]) continue;
        WeightIndexSet I = J;
        I[t] = i;
        std::sort(I.begin(), I.end());
        // sign from moving v_i to its sorted slot
        int c = 0;
        while (I[c] != i) ++c;
        const double sign = ((t + c) % 2 == 0) ? 1.0 : -1.0;
        result(subset_rank(m, I), col) += sign * X(i, J[t]);
      }
    }
  }
  return result;
}

std::vector<WeightIndexSet> weights_of_ext(int n, int k) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("k must be in 1..n");
  return k_subsets(n + 1, k);
}

complexd project_weight(int n, const WeightIndexSet& S) {
  complexd sum(0.0, 0.0);
  for (int i : S) {
    if (i < 0 || i > n) throw std::invalid_argument("weight index out of range");
    sum += zeta_pow(n, i);
  }
  return -sum;
}

std::string weight_label(int n, const WeightIndexSet& S) {
  std::ostringstream out;
  const char* sep = (n > 9) ? "," : "";
  for (size_t t = 0; t < S.size(); ++t) {
    if (t > 0) out << sep;
    out << S[t];
  }
  return out.str();
}

SolitonGraph soliton_graph(int n, int k, const StokesVector& S) {
  if (S.n != n || static_cast<int>(S.s.size()) != n)
    throw std::invalid_argument("Stokes vector length does not match n");
  (void)StokesVector::symmetric(n, S.s, 1e-9);
  SolitonGraph graph;
  graph.n = n;
  graph.k = k;
  const auto weights = weights_of_ext(n, k);
  graph.vertices.reserve(weights.size());
  for (const auto& w : weights) graph.vertices.push_back({w, project_weight(n, w)});

  const int count = static_cast<int>(weights.size());
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const WeightIndexSet& A = weights[a];
      const WeightIndexSet& B = weights[b];
      // difference of the weights is a root iff the sets share k-1 elements
      WeightIndexSet only_a, only_b;
      std::set_difference(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(only_a));
      std::set_difference(B.begin(), B.end(), A.begin(), A.end(), std::back_inserter(only_b));
      if (only_a.size() != 1) continue;
      const RootA root(only_a[0], only_b[0]);
      const ParticleClass cls = particle_class(n, root);
      graph.edges.push_back({a, b, root, cls.k, cls.mass, S.s[cls.k - 1]});
    }
  }
  return graph;
}

std::vector<std::vector<int>> merged_positions(const SolitonGraph& graph, double tol) {
  std::vector<std::vector<int>> clusters;
  for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v) {
    bool placed = false;
    for (auto& cluster : clusters) {
      if (std::abs(graph.vertices[cluster.front()].position - graph.vertices[v].position) < tol) {
        cluster.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({v});
  }
  return clusters;
}

EtaConnection make_eta_connection(int n, std::vector<double> exponents) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  if (static_cast<int>(exponents.size()) != n + 1)
    throw std::invalid_argument("need n+1 exponents");
  for (int i = 0; i <= n; ++i)
    if (exponents[i] < -1.0)
      throw std::invalid_argument("exponent k_" + std::to_string(i) + " < -1");
  for (int i = 1; i <= n; ++i)
    if (std::abs(exponents[i] - exponents[n - i + 1]) > 1e-12)
      throw std::invalid_argument("exponent symmetry k_i = k_{n-i+1} violated");
  return EtaConnection{n, std::move(exponents), -1};
}

EtaConnection cpn_connection(int n) {
  std::vector<double> k(n + 1, -1.0);
  k[0] = 0.0;
  return make_eta_connection(n, std::move(k));
}

Eigen::MatrixXd eta_matrix(const EtaConnection& conn, double z, bool dz_over_z) {
  if (!(z > 0.0)) throw std::invalid_argument("eta is evaluated on the positive real axis only");
  const int n = conn.n;
  const double shift = dz_over_z ? 1.0 : 0.0;
  Eigen::MatrixXd eta = Eigen::MatrixXd::Zero(n + 1, n + 1);
  eta(0, n) = std::pow(z, conn.exponents[0] + shift);
  for (int i = 1; i <= n; ++i) eta(i, i - 1) = std::pow(z, conn.exponents[i] + shift);
  return eta;
}

JordanAnalysis unipotent_jordan_analysis(const Eigen::MatrixXcd& T, double rank_tol) {
  const int dim = static_cast<int>(T.rows());
  const Eigen::MatrixXcd N = T - Eigen::MatrixXcd::Identity(dim, dim);
  JordanAnalysis out;
  std::vector<int> ranks;  // ranks[j] = rank(N^{j+1})
  Eigen::MatrixXcd P = N;
  double sigma_prev = 1.0;
  const double sigma_N = Eigen::JacobiSVD<Eigen::MatrixXcd>(N).singularValues()(0);
  for (int j = 1; j <= dim; ++j) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(P);
    const auto& sigma = svd.singularValues();
    const double cutoff = rank_tol * std::max(1.0, sigma(0));
    int rank = 0;
    while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
    ranks.push_back(rank);
    if (rank == 0) {
      // cancellation residual relative to the magnitudes that produced P
      out.nilpotent_residual = sigma(0) / std::max(1.0, sigma_prev * sigma_N);
      break;
    }
    sigma_prev = sigma(0);
    P = P * N;
  }
  if (ranks.empty() || ranks.back() != 0) return out;  // blocks stays empty
  // number of blocks of size >= j is rank(N^{j-1}) - rank(N^j)
  std::vector<int> at_least;
  int prev = dim;
  for (int r : ranks) {
    at_least.push_back(prev - r);
    prev = r;
  }
  for (size_t j = 0; j < at_least.size(); ++j) {
    const int next = (j + 1 < at_least.size()) ? at_least[j + 1] : 0;
    for (int b = 0; b < at_least[j] - next; ++b)
      out.blocks.push_back(static_cast<int>(j) + 1);
  }
  std::sort(out.blocks.rbegin(), out.blocks.rend());
  return out;
}

std::vector<int> unipotent_jordan_blocks(const Eigen::MatrixXcd& T, double rank_tol) {
  return unipotent_jordan_analysis(T, rank_tol).blocks;
}

SatakeReport satake_check(int n, int k, const StokesVector& S) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("k must be in 1..n");
  SatakeReport report;
  report.n = n;
  report.k = k;
  std::ostringstream msg;

  // (a) the cross-section property seen through the representation
  const Eigen::MatrixXcd M = steinberg_monodromy(S);
  const complexd tr = ext_power_group(M, k).trace();
  report.trace_error = std::abs(tr - S.s[k - 1]);
  msg << "tr(wedge^" << k << " M) = " << tr.real();
  if (std::abs(tr.imag()) > 1e-12) msg << (tr.imag() < 0 ? "" : "+") << tr.imag() << "i";
  msg << " vs s_" << k << " = " << S.s[k - 1].real() << "; ";

  // (b) spectrum functoriality for the projective-space connection
  const EtaConnection conn = cpn_connection(n);
  for (double z : {0.5, 1.0, 2.0}) {
    const Eigen::MatrixXd eta = eta_matrix(conn, z);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> base(eta.cast<complexd>());
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> lifted(ext_power_algebra(eta.cast<complexd>(), k));
    std::vector<complexd> sums;
    for (const auto& subset : k_subsets(n + 1, k)) {
      complexd s(0.0, 0.0);
      for (int i : subset) s += base.eigenvalues()(i);
      sums.push_back(s);
    }
    std::vector<complexd> spec(lifted.eigenvalues().data(),
                               lifted.eigenvalues().data() + sums.size());
    std::sort(sums.begin(), sums.end(), lex_less_complex);
    std::sort(spec.begin(), spec.end(), lex_less_complex);
    for (size_t i = 0; i < sums.size(); ++i)
      report.spectrum_error = std::max(report.spectrum_error, std::abs(sums[i] - spec[i]));
  }
  msg << "eta spectrum error " << report.spectrum_error << "; ";

  // (c) binomial point: wedge^k M is unipotent. It is a single Jordan block
  // only for k = 1 or k = n; in between the block type is reported.
  const StokesVector binomial = binomial_stokes(n);
  bool is_binomial = true;
  for (int i = 0; i < n; ++i)
    if (std::abs(S.s[i] - binomial.s[i]) > 1e-12) { is_binomial = false; break; }
  report.binomial_case = is_binomial;
  if (is_binomial) {
    const Eigen::MatrixXcd W = ext_power_group(M, k);
    const int dim = static_cast<int>(W.rows());
    // all eigenvalues 1 iff tr(W^p) = dim for p = 1..dim (Newton identities);
    // stable, unlike eigensolving a defective matrix
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(dim, dim);
    for (int p = 1; p <= dim; ++p) {
      P = P * W;
      report.unipotence_error = std::max(
          report.unipotence_error, std::abs(P.trace() - complexd(dim, 0.0)) / dim);
    }
    report.jordan_blocks = unipotent_jordan_blocks(W);
    msg << "unipotence error " << report.unipotence_error << ", jordan blocks [";
    for (size_t i = 0; i < report.jordan_blocks.size(); ++i)
      msg << (i ? "," : "") << report.jordan_blocks[i];
    msg << "]; ";
  }

  report.passed = report.trace_error < 1e-8 && report.spectrum_error < 1e-8;
  if (is_binomial) {
    report.passed = report.passed && report.unipotence_error < 1e-8 &&
                    !report.jordan_blocks.empty();
    if (k == 1 || k == n)
      report.passed = report.passed && report.jordan_blocks.size() == 1;
  }
  report.message = msg.str();
  return report;
}

}  // namespace ttoda
