#include "ttoda/root_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ttoda {

namespace {

constexpr double kPi = std::numbers::pi;

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
}

void check_root(int n, const RootA& root) {
  if (root.i == root.j || root.i < 0 || root.j < 0 || root.i > n || root.j > n)
    throw std::invalid_argument("invalid root " + root.label() + " for rank " +
                                std::to_string(n));
}

complexd zeta_pow(int n, long long e) {
  const int h = n + 1;
  long long r = e % h;
  if (r < 0) r += h;
  // exact values at the half-period marks keep projections of antipodal
  // roots exactly opposite
  if (r == 0) return {1.0, 0.0};
  if (2 * r == h) return {-1.0, 0.0};
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / h);
}

}  // namespace

int RootA::difference(int n) const {
  int d = (i - j) % (n + 1);
  if (d < 0) d += n + 1;
  return d;
}

std::string RootA::label() const {
  return "x" + std::to_string(i) + "-x" + std::to_string(j);
}

std::vector<RootA> roots_An(int n) {
  check_rank(n);
  std::vector<RootA> roots;
  roots.reserve(n * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) roots.emplace_back(i, j);
  return roots;
}

std::vector<std::vector<RootA>> coxeter_orbits(int n) {
  check_rank(n);
  std::vector<std::vector<RootA>> orbits(n);
  for (const RootA& root : roots_An(n))
    orbits[root.difference(n) - 1].push_back(root);
  return orbits;
}

complexd project_root(int n, const RootA& root, int spin_order) {
  check_root(n, root);
  if (spin_order < 1 || spin_order > n)
    throw std::invalid_argument("spin order must be in 1..n");
  const double sign = (spin_order % 2 == 0) ? 1.0 : -1.0;
  return sign * (zeta_pow(n, static_cast<long long>(spin_order) * root.i) -
                 zeta_pow(n, static_cast<long long>(spin_order) * root.j));
}

ParticleClass particle_class(int n, const RootA& root) {
  check_root(n, root);
  const int d = std::abs(root.i - root.j);
  const int k = std::min(d, n + 1 - d);
  return ParticleClass{k, 2.0 * std::sin(k * kPi / (n + 1))};
}

std::vector<double> particle_masses(int n) {
  check_rank(n);
  std::vector<double> masses;
  for (int k = 1; k <= (n + 1) / 2; ++k)
    masses.push_back(2.0 * std::sin(k * kPi / (n + 1)));
  return masses;
}

Eigen::MatrixXd spin_table(int n) {
  check_rank(n);
  const int classes = (n + 1) / 2;
  Eigen::MatrixXd table(classes, n);
  for (int k = 1; k <= classes; ++k)
    for (int r = 1; r <= n; ++r)
      table(k - 1, r - 1) = 2.0 * std::sin(static_cast<double>(r) * k * kPi / (n + 1));
  return table;
}

Eigen::MatrixXd cyclic_shift_plus(int n) {
  check_rank(n);
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i < n; ++i) E(i, i + 1) = 1.0;
  E(n, 0) = 1.0;
  return E;
}

Eigen::MatrixXd cyclic_shift_minus(int n) { return cyclic_shift_plus(n).transpose(); }

Eigen::MatrixXcd vandermonde_omega(int n) {
  check_rank(n);
  Eigen::MatrixXcd omega(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      omega(i, j) = zeta_pow(n, static_cast<long long>(i) * j);
  return omega;
}

Eigen::MatrixXcd vandermonde_omega_inverse(int n) {
  // Omega Omega^H = (n+1) I and Omega is symmetric
  return vandermonde_omega(n).conjugate() / static_cast<double>(n + 1);
}

Eigen::VectorXcd apposition_diagonal(int n) {
  check_rank(n);
  Eigen::VectorXcd d(n + 1);
  for (int i = 0; i <= n; ++i) d(i) = zeta_pow(n, i);
  return d;
}

std::vector<double> mass_operator_spectrum(int n) {
  check_rank(n);
  const int dim = n + 1;
  const Eigen::MatrixXd Ep = cyclic_shift_plus(n);
  const Eigen::MatrixXd Em = cyclic_shift_minus(n);
  // operator on diagonal matrices, written in the basis E_{jj}
  Eigen::MatrixXd op(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(dim, dim);
    w(j, j) = 1.0;
    const Eigen::MatrixXd inner = Em * w - w * Em;
    const Eigen::MatrixXd outer = Ep * inner - inner * Ep;
    op.col(j) = outer.diagonal();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed on mass operator");
  std::vector<double> evals(es.eigenvalues().data(), es.eigenvalues().data() + dim);
  std::sort(evals.begin(), evals.end());
  // the identity direction is the kernel; the traceless complement carries
  // the remaining n eigenvalues
  auto zero = std::min_element(evals.begin(), evals.end(),
                               [](double a, double b) { return std::abs(a) < std::abs(b); });
  evals.erase(zero);
  return evals;
}

double canonical_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

CoxeterDiagram coxeter_diagram(int n, int spin_order) {
  check_rank(n);
  if (spin_order < 1 || spin_order > n)
    throw std::invalid_argument("spin order must be in 1..n");

  struct Raw {
    complexd pos;
    double angle;  // sort key; zero points get -inf so they sort first
    double radius;
    RootA root;
  };
  std::vector<Raw> raw;
  for (const RootA& root : roots_An(n)) {
    const complexd p = project_root(n, root, spin_order);
    const double radius = std::abs(p);
    const double angle = radius < kAngleTol
                             ? -std::numeric_limits<double>::infinity()
                             : canonical_angle(std::arg(p));
    raw.push_back({p, angle, radius, root});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (std::abs(a.angle - b.angle) > kAngleTol) return a.angle < b.angle;
    if (std::abs(a.radius - b.radius) > kAngleTol) return a.radius < b.radius;
    return a.root.label() < b.root.label();
  });

  CoxeterDiagram diagram;
  diagram.n = n;
  diagram.spin_order = spin_order;

  // cluster coincident projections into points
  for (const Raw& r : raw) {
    if (!diagram.points.empty() &&
        std::abs(diagram.points.back().position - r.pos) < kAngleTol) {
      diagram.points.back().sources.push_back(r.root);
    } else {
      diagram.points.push_back({r.pos, {r.root}});
    }
  }

  // rays: nonzero points grouped by canonical angle
  for (int idx = 0; idx < static_cast<int>(diagram.points.size()); ++idx) {
    const complexd p = diagram.points[idx].position;
    if (std::abs(p) < kAngleTol) continue;
    const double angle = canonical_angle(std::arg(p));
    if (!diagram.rays.empty() && std::abs(diagram.rays.back().angle - angle) < kAngleTol)
      diagram.rays.back().points.push_back(idx);
    else
      diagram.rays.push_back({angle, {idx}});
  }

  // wheels: nonzero points grouped by modulus
  std::vector<int> by_radius;
  for (int idx = 0; idx < static_cast<int>(diagram.points.size()); ++idx)
    if (std::abs(diagram.points[idx].position) >= kAngleTol) by_radius.push_back(idx);
  std::sort(by_radius.begin(), by_radius.end(), [&](int a, int b) {
    return std::abs(diagram.points[a].position) < std::abs(diagram.points[b].position);
  });
  for (int idx : by_radius) {
    const double radius = std::abs(diagram.points[idx].position);
    if (!diagram.wheels.empty() &&
        std::abs(diagram.wheels.back().radius - radius) < kAngleTol)
      diagram.wheels.back().points.push_back(idx);
    else
      diagram.wheels.push_back({radius, {idx}});
  }
  return diagram;
}

}  // namespace ttoda
