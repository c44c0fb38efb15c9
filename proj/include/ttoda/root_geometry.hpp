#ifndef TTODA_ROOT_GEOMETRY_HPP
#define TTODA_ROOT_GEOMETRY_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ttoda {

using complexd = std::complex<double>;

/// A root x_i - x_j of the A_n root system, i != j, indices in 0..n.
struct RootA {
  int i = 0;
  int j = 0;

  RootA() = default;
  RootA(int i_, int j_) : i(i_), j(j_) {}

  RootA negated() const { return RootA(j, i); }

  /// (i - j) mod (n+1), in 1..n. Labels the Coxeter orbit.
  int difference(int n) const;

  std::string label() const;  // "x0-x3"

  friend bool operator==(const RootA&, const RootA&) = default;
  friend auto operator<=>(const RootA&, const RootA&) = default;
};

/// Coxeter orbit class of a root: k in 1..floor((n+1)/2), mass 2 sin(k pi/(n+1)).
struct ParticleClass {
  int k = 0;
  double mass = 0.0;
};

std::vector<RootA> roots_An(int n);

/// Partition of roots_An(n) into n orbits of the Coxeter element
/// (the cyclic index permutation). Orbit d holds roots with
/// (i - j) mod (n+1) == d, d = 1..n; each orbit has n+1 roots.
std::vector<std::vector<RootA>> coxeter_orbits(int n);

/// Projection of a root to the r-th Coxeter plane: the root evaluated on
/// (-d_{n+1})^r, i.e. (-1)^r (zeta^{ri} - zeta^{rj}) with zeta = e^{2 pi i/(n+1)}.
complexd project_root(int n, const RootA& root, int spin_order = 1);

ParticleClass particle_class(int n, const RootA& root);

/// Masses L_k = 2 sin(k pi/(n+1)), k = 1..floor((n+1)/2).
std::vector<double> particle_masses(int n);

/// Signed spins: entry (k-1, r-1) = 2 sin(r k pi/(n+1)),
/// k = 1..floor((n+1)/2), r = 1..n. Column r = 1 is the mass list.
Eigen::MatrixXd spin_table(int n);

/// Eigenvalues of w -> [E+, [E-, w]] on traceless diagonal matrices,
/// sorted ascending. Equals { 4 sin^2(k pi/(n+1)) : k = 1..n } as a multiset.
std::vector<double> mass_operator_spectrum(int n);

// -- module constants -------------------------------------------------------

/// E+ = E_{n,0} + sum_i E_{i,i+1} (cyclic shift); E- = E+^T.
Eigen::MatrixXd cyclic_shift_plus(int n);
Eigen::MatrixXd cyclic_shift_minus(int n);

/// Vandermonde matrix Omega = (zeta^{ij})_{0<=i,j<=n}; its columns are the
/// eigenvectors of E+, so Omega^{-1} E+ Omega = diag(1, zeta, ..., zeta^n).
Eigen::MatrixXcd vandermonde_omega(int n);
Eigen::MatrixXcd vandermonde_omega_inverse(int n);

/// d_{n+1} = diag(1, zeta, ..., zeta^n).
Eigen::VectorXcd apposition_diagonal(int n);

// -- Coxeter plane diagram ---------------------------------------------------

struct DiagramPoint {
  complexd position;
  std::vector<RootA> sources;  // roots projecting to this position
};

struct DiagramRay {
  double angle = 0.0;           // canonical, in (-pi, pi]
  std::vector<int> points;      // indices into CoxeterDiagram::points
};

struct DiagramWheel {
  double radius = 0.0;
  std::vector<int> points;
};

struct CoxeterDiagram {
  int n = 0;
  int spin_order = 1;
  std::vector<DiagramPoint> points;   // sorted by (angle, radius, source label)
  std::vector<DiagramRay> rays;       // sorted by angle; nonzero points only
  std::vector<DiagramWheel> wheels;   // sorted by radius; nonzero points only
};

/// All n(n+1) roots projected to the r-th Coxeter plane, grouped into
/// coincident points, rays (distinct arguments) and wheels (distinct moduli).
CoxeterDiagram coxeter_diagram(int n, int spin_order = 1);

/// Canonicalize an angle to (-pi, pi].
double canonical_angle(double a);

/// Angular tolerance used when grouping rays.
inline constexpr double kAngleTol = 1e-9;

}  // namespace ttoda

#endif
