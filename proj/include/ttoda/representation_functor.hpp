#ifndef TTODA_REPRESENTATION_FUNCTOR_HPP
#define TTODA_REPRESENTATION_FUNCTOR_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ttoda/parameters_stokes.hpp"
#include "ttoda/root_geometry.hpp"

namespace ttoda {

/// Sorted k-subset {i_1 < ... < i_k} of {0..n}, indexing a weight
/// x_{i_1} + ... + x_{i_k} of the k-th exterior power.
using WeightIndexSet = std::vector<int>;

/// All k-subsets of {0..m-1} in lexicographic order.
std::vector<WeightIndexSet> k_subsets(int m, int k);

/// Lexicographic rank of a sorted k-subset of {0..m-1}.
int subset_rank(int m, const WeightIndexSet& subset);

/// Group-level exterior power: entry (I, J) is the minor of A with rows I,
/// columns J, k-subsets in lexicographic order. Multiplicative in A.
Eigen::MatrixXcd ext_power_group(const Eigen::MatrixXcd& A, int k);

/// Algebra-level exterior power (derivation action): X applied in one slot,
/// summed over slots. exp(ext_power_algebra(X, k)) = ext_power_group(exp X, k).
Eigen::MatrixXcd ext_power_algebra(const Eigen::MatrixXcd& X, int k);

/// Weights of the k-th exterior power of the standard representation,
/// as index sets. All C(n+1, k) subsets in lexicographic order.
std::vector<WeightIndexSet> weights_of_ext(int n, int k);

/// Projection of a weight to the Coxeter plane: -(zeta^{i_1} + ... + zeta^{i_k}).
complexd project_weight(int n, const WeightIndexSet& S);

std::string weight_label(int n, const WeightIndexSet& S);

// -- soliton graph ------------------------------------------------------------

struct SolitonVertex {
  WeightIndexSet weight;
  complexd position;
};

struct SolitonEdge {
  int a = 0;            // vertex indices (a < b)
  int b = 0;
  RootA root;           // weight difference lambda_a - lambda_b
  int particle = 0;     // class k
  double mass = 0.0;    // 2 sin(particle pi/(n+1)) = chord length
  complexd multiplicity;  // s_particle
};

/// Vacua (weights of wedge^k) with projected positions; an edge joins two
/// vacua iff their index sets share exactly k-1 elements, i.e. the weight
/// difference is a root. Every vertex has degree k(n+1-k).
struct SolitonGraph {
  int n = 0;
  int k = 0;
  std::vector<SolitonVertex> vertices;
  std::vector<SolitonEdge> edges;
};

SolitonGraph soliton_graph(int n, int k, const StokesVector& S);

/// Vertex indices clustered by coincident projected position, in the
/// deterministic order first-seen along the lexicographic vertex list.
std::vector<std::vector<int>> merged_positions(const SolitonGraph& graph,
                                               double tol = 1e-9);

// -- holomorphic data ---------------------------------------------------------

/// Cyclic connection-form matrix with entries z^{k_i}. The overall 1/lambda
/// spectral factor is metadata (lambda_power), never evaluated.
struct EtaConnection {
  int n = 0;
  std::vector<double> exponents;  // k_0..k_n, >= -1, k_i = k_{n-i+1} for i >= 1
  int lambda_power = -1;
};

EtaConnection make_eta_connection(int n, std::vector<double> exponents);

/// Exponents (0, -1, ..., -1): the projective-space (Frenkel-Gross) point.
EtaConnection cpn_connection(int n);

/// eta(z): z^{k_0} in the top-right corner, z^{k_i} on the subdiagonal.
/// Requires z > 0 (positive real branch). With dz_over_z set, returns the
/// dz/z presentation instead (entries z^{k_i + 1}).
Eigen::MatrixXd eta_matrix(const EtaConnection& conn, double z, bool dz_over_z = false);

// -- Satake cross-checks ------------------------------------------------------

struct SatakeReport {
  int n = 0;
  int k = 0;
  double trace_error = 0.0;      // |tr(wedge^k M) - s_k|
  double spectrum_error = 0.0;   // eta spectra vs k-fold sums, max over z grid
  bool binomial_case = false;    // ran the unipotence checks
  double unipotence_error = 0.0; // scaled residual of (wedge^k M - I)^{nilpotency index}
  std::vector<int> jordan_blocks;  // block sizes of wedge^k M, descending
  bool passed = false;
  std::string message;
};

/// Checks (a) tr(wedge^k steinberg_monodromy(S)) = s_k; (b) the spectrum of
/// ext_power_algebra(eta(z), k) for the cpn connection equals the k-fold sums
/// of distinct eigenvalues of eta(z) at z in {0.5, 1, 2}; (c) when S is the
/// binomial vector, wedge^k M is unipotent, with its Jordan type reported.
SatakeReport satake_check(int n, int k, const StokesVector& S);

struct JordanAnalysis {
  std::vector<int> blocks;          // empty if (T - I) is not numerically nilpotent
  double nilpotent_residual = 0.0;  // sigma_1 of the vanishing power, scaled
};

/// Jordan block sizes of a unipotent T from the rank sequence of (T - I)^j,
/// computed with SVD ranks; eigensolving a defective matrix would not be
/// reliable here.
JordanAnalysis unipotent_jordan_analysis(const Eigen::MatrixXcd& T, double rank_tol = 1e-7);

std::vector<int> unipotent_jordan_blocks(const Eigen::MatrixXcd& T, double rank_tol = 1e-7);

}  // namespace ttoda

#endif
