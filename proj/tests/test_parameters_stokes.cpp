#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "ttoda/parameters_stokes.hpp"
#include "ttoda/root_geometry.hpp"

using namespace ttoda;

namespace {
constexpr double kPi = std::numbers::pi;

long long pascal(int m, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("params_from_m at the fully symmetric point") {
  const TodaParams p = params_from_m(2, {0.0, 0.0, 0.0}, 3.0);
  CHECK(p.N == doctest::Approx(3.0));
  for (double ki : p.k) CHECK(ki == doctest::Approx(0.0));
}

TEST_CASE("params_from_k recovers the projective-space point") {
  const TodaParams p = params_from_k(4, {0.0, -1.0, -1.0, -1.0, -1.0});
  CHECK(p.N == doctest::Approx(1.0));
  const std::vector<double> expected = {-2.0, -1.0, 0.0, 1.0, 2.0};
  for (int i = 0; i <= 4; ++i) CHECK(p.m[i] == doctest::Approx(expected[i]));
}

TEST_CASE("params_from_m matches direct substitution in the cyclic relation") {
  const std::vector<double> m = {-0.9, -0.3, 0.3, 0.9};
  const TodaParams p = params_from_m(3, m, 4.0);
  for (int i = 0; i <= 3; ++i) {
    const double prev = (i == 0) ? m[3] : m[i - 1];
    const double expected = 4.0 / 4.0 * (1.0 - m[i] + prev) - 1.0;
    CHECK(p.k[i] == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("m <-> k round-trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<double> k(n + 1);
    k[0] = dist(rng);
    for (int i = 1; 2 * i <= n + 1; ++i) {
      if (i > n) break;
      k[i] = dist(rng);
      k[n - i + 1] = k[i];
    }
    double N = n + 1;
    for (double ki : k) N += ki;
    if (N <= 0.1) continue;
    const TodaParams p = params_from_k(n, k);
    const TodaParams q = params_from_m(n, p.m, p.N);
    for (int i = 0; i <= n; ++i) CHECK(q.k[i] == doctest::Approx(k[i]).epsilon(1e-12));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params_from_m(1, {-0.7, 0.5}), std::invalid_argument);  // not anti-symmetric
  CHECK_THROWS_AS(params_from_m(1, {-0.8, 0.8}), std::invalid_argument);  // gap 1.6 > 1
  CHECK_THROWS_AS(params_from_m(2, {0.0, 0.0, 0.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(params_from_k(2, {-1.0, -1.0, -1.0}), std::invalid_argument);  // N = 0
  CHECK_THROWS_AS(params_from_k(2, {0.0, -1.5, -1.5}), std::invalid_argument);   // k_i < -1
  CHECK_THROWS_AS(params_from_k(3, {0.0, -1.0, 0.5, -0.5}), std::invalid_argument);  // k_1 != k_3
  // the boundary m = -x0 is allowed, with equality in m_{i+1} - m_i <= 1
  for (int n = 1; n <= 8; ++n) CHECK_NOTHROW(params_from_m(n, m_projective(n)));
}

TEST_CASE("stokes_from_m closed-form examples") {
  const StokesVector s1 = stokes_from_m(params_from_m(1, {-0.5, 0.5}));
  CHECK(s1.s[0].real() == doctest::Approx(2.0));
  CHECK(s1.s[0].imag() == 0.0);

  const StokesVector s3 = stokes_from_m(params_from_m(3, m_projective(3)));
  CHECK(s3.s[0].real() == doctest::Approx(4.0));
  CHECK(s3.s[1].real() == doctest::Approx(6.0));
  CHECK(s3.s[2].real() == doctest::Approx(4.0));

  // m = 0 for n=2: the z_j are the three cube roots of unity
  const StokesVector s0 = stokes_from_m(params_from_m(2, {0.0, 0.0, 0.0}));
  CHECK(std::abs(s0.s[0]) < 1e-12);
  CHECK(std::abs(s0.s[1]) < 1e-12);
}

TEST_CASE("binomial Stokes data is exact for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const StokesVector S = binomial_stokes(n);
    for (int k = 1; k <= n; ++k) {
      CHECK(S.s[k - 1].real() == static_cast<double>(pascal(n + 1, k)));
      CHECK(S.s[k - 1].imag() == 0.0);
    }
  }
}

TEST_CASE("stokes_from_m symmetry is exact and values are real") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-0.45, 0.45);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<double> m(n + 1, 0.0);
    for (int i = 0; 2 * i < n; ++i) {
      m[i] = -std::abs(dist(rng)) - 0.01 * (n - 2 * i);
      m[n - i] = -m[i];
    }
    std::sort(m.begin(), m.end());
    bool valid = true;
    for (int i = 0; i < n; ++i)
      if (m[i + 1] - m[i] > 1.0) valid = false;
    if (!valid) continue;
    const StokesVector S = stokes_from_m(params_from_m(n, m));
    for (int k = 1; k <= n; ++k) {
      CHECK(S.s[k - 1] == S.s[n - k]);  // exact, not approximate
      CHECK(S.s[k - 1].imag() == 0.0);
    }
  }
}

TEST_CASE("StokesVector::symmetric validates") {
  CHECK_NOTHROW(StokesVector::symmetric(3, {complexd(1), complexd(5), complexd(1)}));
  CHECK_THROWS_AS(StokesVector::symmetric(3, {complexd(1), complexd(5), complexd(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StokesVector::symmetric(3, {complexd(1)}), std::invalid_argument);
}

TEST_CASE("steinberg_monodromy small cases") {
  const Eigen::MatrixXcd M1 = steinberg_monodromy(StokesVector{1, {complexd(2.0)}});
  CHECK(M1.trace().real() == doctest::Approx(2.0));
  CHECK(std::abs(M1.determinant() - complexd(1.0)) < 1e-14);

  const Eigen::MatrixXcd M0 = steinberg_monodromy(StokesVector{1, {complexd(0.0)}});
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M0);
  std::vector<double> imag = {es.eigenvalues()(0).imag(), es.eigenvalues()(1).imag()};
  std::sort(imag.begin(), imag.end());
  CHECK(imag[0] == doctest::Approx(-1.0));
  CHECK(imag[1] == doctest::Approx(1.0));

  // binomial point: char poly (z-1)^4, checked via exact nilpotency of M - I
  const Eigen::MatrixXcd M3 = steinberg_monodromy(binomial_stokes(3));
  const Eigen::MatrixXcd N = M3 - Eigen::MatrixXcd::Identity(4, 4);
  CHECK((N * N * N * N).norm() == 0.0);  // integer arithmetic, exact
  CHECK((N * N * N).norm() > 0.5);       // regular: nilpotency index is full
}

TEST_CASE("cross-section property: char poly coefficients reproduce S") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<complexd> s(n);
      for (int k = 1; 2 * k <= n + 1 && k <= n; ++k) {
        s[k - 1] = complexd(dist(rng), dist(rng));
        s[n - k] = s[k - 1];
      }
      const StokesVector S{n, s};
      const Eigen::MatrixXcd M = steinberg_monodromy(S);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
      std::vector<complexd> coeff(n + 2, complexd(0.0));
      coeff[0] = 1.0;
      for (int j = 0; j <= n; ++j)
        for (int d = j + 1; d >= 1; --d) coeff[d] += es.eigenvalues()(j) * coeff[d - 1];
      for (int k = 1; k <= n; ++k) CHECK(std::abs(coeff[k] - s[k - 1]) < 1e-8);
      CHECK(std::abs(coeff[n + 1] - complexd(1.0)) < 1e-8);  // det M = 1
    }
  }
}

TEST_CASE("stokes_factor: zero data gives the identity") {
  for (int n = 1; n <= 4; ++n) {
    const StokesVector zero{n, std::vector<complexd>(n, complexd(0.0))};
    const CoxeterDiagram d = coxeter_diagram(n, 1);
    for (const DiagramRay& ray : d.rays) {
      const Eigen::MatrixXcd Q = stokes_factor(n, zero, ray.angle);
      CHECK((Q - Eigen::MatrixXcd::Identity(n + 1, n + 1)).norm() < 1e-13);
    }
  }
}

TEST_CASE("stokes_factor n=1 at angle 0 is I + 2P with P^2 = 0") {
  const StokesVector S{1, {complexd(2.0)}};
  const Eigen::MatrixXcd Q = stokes_factor(1, S, 0.0);
  // oracle: the ray at angle 0 carries x1-x0, so P = Omega E_{1,0} Omega^{-1}
  Eigen::MatrixXcd E10 = Eigen::MatrixXcd::Zero(2, 2);
  E10(1, 0) = 1.0;
  const Eigen::MatrixXcd P = vandermonde_omega(1) * E10 * vandermonde_omega_inverse(1);
  CHECK((P * P).norm() < 1e-14);
  CHECK((Q - (Eigen::MatrixXcd::Identity(2, 2) + 2.0 * P)).norm() < 1e-12);
}

TEST_CASE("stokes_factor n=2: each ray carries one root, rank(Q - I) = 1") {
  const StokesVector S{2, {complexd(1.3), complexd(1.3)}};
  const CoxeterDiagram d = coxeter_diagram(2, 1);
  REQUIRE(d.rays.size() == 6);
  for (const DiagramRay& ray : d.rays) {
    REQUIRE(ray.points.size() == 1);
    CHECK(d.points[ray.points.front()].sources.size() == 1);
    const Eigen::MatrixXcd Q = stokes_factor(2, S, ray.angle);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(Q - Eigen::MatrixXcd::Identity(3, 3));
    qr.setThreshold(1e-10);
    CHECK(qr.rank() == 1);
  }
}

TEST_CASE("stokes_factor is unipotent and rejects non-ray angles") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int n = 1; n <= 5; ++n) {
    std::vector<complexd> s(n);
    for (int k = 1; 2 * k <= n + 1 && k <= n; ++k) {
      s[k - 1] = complexd(dist(rng), dist(rng));
      s[n - k] = s[k - 1];
    }
    const StokesVector S{n, s};
    const CoxeterDiagram d = coxeter_diagram(n, 1);
    for (const DiagramRay& ray : d.rays) {
      const Eigen::MatrixXcd Q = stokes_factor(n, S, ray.angle);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Q);
      for (int i = 0; i <= n; ++i) CHECK(std::abs(es.eigenvalues()(i) - complexd(1.0)) < 1e-7);
    }
    CHECK_THROWS_AS(stokes_factor(n, S, 0.12345), std::invalid_argument);
  }
}

TEST_CASE("build_W: zero w gives the cyclic permutation matrix") {
  for (int n = 1; n <= 5; ++n) {
    const Eigen::MatrixXd W = build_W(n, std::vector<double>(n + 1, 0.0));
    CHECK((W - cyclic_shift_plus(n)).norm() == 0.0);
    Eigen::EigenSolver<Eigen::MatrixXd> es(W);
    for (int i = 0; i <= n; ++i)
      CHECK(std::abs(es.eigenvalues()(i)) == doctest::Approx(1.0));
  }
}

TEST_CASE("build_W n=1 entries and char poly") {
  const Eigen::MatrixXd W = build_W(1, {-0.3, 0.3});
  CHECK(W(0, 1) == doctest::Approx(std::exp(0.6)));
  CHECK(W(1, 0) == doctest::Approx(std::exp(-0.6)));
  // char poly mu^2 - 1: eigenvalues +/- 1
  Eigen::EigenSolver<Eigen::MatrixXd> es(W);
  std::vector<double> ev = {es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[1] == doctest::Approx(1.0));
}

TEST_CASE("build_W char poly is mu^{n+1} - 1 and [W^T,W] is traceless diagonal") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> w(n + 1, 0.0);
      for (int i = 0; 2 * i < n; ++i) {
        w[i] = dist(rng);
        w[n - i] = -w[i];
      }
      const Eigen::MatrixXd W = build_W(n, w);
      Eigen::EigenSolver<Eigen::MatrixXd> es(W);
      // eigenvalues are the (n+1)-th roots of unity
      for (int i = 0; i <= n; ++i) {
        const complexd mu = es.eigenvalues()(i);
        CHECK(std::abs(std::pow(mu, n + 1) - complexd(1.0)) < 1e-10);
      }
      const Eigen::MatrixXd C = W.transpose() * W - W * W.transpose();
      CHECK(std::abs(C.trace()) < 1e-13);
      CHECK((C - Eigen::MatrixXd(C.diagonal().asDiagonal())).norm() == 0.0);
      // diagonal entries are -e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})}
      for (int i = 0; i <= n; ++i) {
        const int ip = (i + 1) % (n + 1);
        const int im = (i + n) % (n + 1);
        const double expected =
            -std::exp(2.0 * (w[ip] - w[i])) + std::exp(2.0 * (w[i] - w[im]));
        CHECK(C(i, i) == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(build_W(2, {0.1, 0.0, 0.2}), std::invalid_argument);
}
