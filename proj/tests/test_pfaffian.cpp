#include <doctest.h>

#include <cmath>
#include <random>

#include "xyefp/pfaffian.hpp"

using namespace xyefp;

namespace {

std::mt19937_64 rng(911);

Complex rand_c() {
  static std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng)};
}

SkewMatrix random_skew(int order) {
  SkewMatrix a(order);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) a.upper(i, j) = rand_c();
  return a;
}

Eigen::MatrixXcd random_dense(int n) {
  Eigen::MatrixXcd x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = rand_c();
  return x;
}

// Independent determinant oracle: subset-mask expansion along rows.
// O(2^n n) states, exact signs, no pivoting in common with the LU path.
Complex det_bitmask(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Complex> dp(std::size_t(1) << n, Complex(0.0, 0.0));
  dp[0] = 1.0;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == Complex(0.0, 0.0)) continue;
    const int row = __builtin_popcountll(mask);
    if (row == n) continue;
    double sign = 1.0;
    for (int col = 0; col < n; ++col) {
      if (mask & (std::size_t(1) << col)) continue;
      dp[mask | (std::size_t(1) << col)] += sign * dp[mask] * m(row, col);
      sign = -sign;
    }
  }
  return dp.back();
}

double rel(const LogScaled& a, Complex b) {
  return std::abs(a.value() - b) / std::max(1e-300, std::abs(b));
}

}  // namespace

TEST_SUITE_BEGIN("pfaffian");

TEST_CASE("log-scaled representation") {
  const LogScaled z = LogScaled::zero();
  CHECK(z.is_zero());
  CHECK(z.value() == Complex(0.0, 0.0));

  const LogScaled x = LogScaled::from(Complex(-3.0, 4.0));
  CHECK(x.log_magnitude == doctest::Approx(std::log(5.0)));
  CHECK(std::abs(std::abs(x.phase) - 1.0) < 1e-15);
  CHECK(std::abs(x.value() - Complex(-3.0, 4.0)) < 1e-14);

  LogScaled y = x;
  y *= Complex(0.0, 2.0);
  CHECK(std::abs(y.value() - Complex(-3.0, 4.0) * Complex(0.0, 2.0)) < 1e-13);
}

TEST_CASE("skew storage enforces antisymmetry structurally") {
  CHECK_THROWS_AS(SkewMatrix(3), ConfigError);
  SkewMatrix a(4);
  a.upper(0, 1) = Complex(2.0, 1.0);
  CHECK(a(1, 0) == -Complex(2.0, 1.0));
  CHECK(a(2, 2) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(a.upper(2, 1), ConfigError);
}

TEST_CASE("order 2: single pairing") {
  SkewMatrix a(2);
  a.upper(0, 1) = Complex(0.3, -0.7);
  CHECK(std::abs(pfaffian(a).value() - Complex(0.3, -0.7)) < 1e-15);
}

TEST_CASE("order 4: three pairings with alternating signs") {
  SkewMatrix a(4);
  const Complex a12 = rand_c(), a13 = rand_c(), a14 = rand_c();
  const Complex a23 = rand_c(), a24 = rand_c(), a34 = rand_c();
  a.upper(0, 1) = a12;
  a.upper(0, 2) = a13;
  a.upper(0, 3) = a14;
  a.upper(1, 2) = a23;
  a.upper(1, 3) = a24;
  a.upper(2, 3) = a34;
  const Complex expected = a12 * a34 - a13 * a24 + a14 * a23;
  CHECK(std::abs(pfaffian_pairing_sum(a).value() - expected) < 1e-14);
  CHECK(std::abs(pfaffian_elimination(a).value() - expected) < 1e-14);
}

TEST_CASE("pf^2 = det on random matrices") {
  for (int trial = 0; trial < 200; ++trial) {
    const int order = 2 * (1 + trial % 6);
    const SkewMatrix a = random_skew(order);
    const LogScaled pf = pfaffian(a);
    CHECK(rel(pf * pf, logdet(a.dense()).value()) < 1e-10);
  }
}

TEST_CASE("elimination agrees with the pairing sum") {
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 2 * (1 + trial % 6);
    const SkewMatrix a = random_skew(order);
    const Complex reference = pfaffian_pairing_sum(a).value();
    CHECK(std::abs(pfaffian_elimination(a).value() - reference) <
          1e-11 * std::max(1.0, std::abs(reference)));
  }
  CHECK_THROWS_AS(pfaffian_pairing_sum(random_skew(14)), ConfigError);
}

TEST_CASE("singular input yields the zero sentinel") {
  SkewMatrix a(4);  // all zeros
  CHECK(pfaffian(a).is_zero());
  CHECK(pfaffian_elimination(a).is_zero());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = 1.0;
  CHECK(logdet(m).is_zero());
}

TEST_CASE("log determinant") {
  SUBCASE("identity and scaled diagonal") {
    CHECK(logdet(Eigen::MatrixXcd::Identity(7, 7)).log_magnitude ==
          doctest::Approx(0.0));
    CHECK(std::abs(logdet(Eigen::MatrixXcd::Identity(7, 7)).phase -
                   Complex(1.0, 0.0)) < 1e-15);
    const int n = 11;
    Eigen::MatrixXcd half = 0.5 * Eigen::MatrixXcd::Identity(n, n);
    CHECK(logdet(half).log_magnitude ==
          doctest::Approx(-n * std::log(2.0)).epsilon(1e-14));
  }

  SUBCASE("matches the subset-expansion oracle") {
    for (int n : {4, 7, 10}) {
      const Eigen::MatrixXcd m = random_dense(n);
      const Complex oracle = det_bitmask(m);
      CHECK(rel(logdet(m), oracle) < 1e-12);
    }
  }

  SUBCASE("log domain survives values that underflow double") {
    const int n = 700;
    Eigen::MatrixXcd tiny = 0.3 * Eigen::MatrixXcd::Identity(n, n);
    const LogScaled d = logdet(tiny);
    CHECK(d.log_magnitude == doctest::Approx(n * std::log(0.3)).epsilon(1e-12));
    CHECK(std::exp(d.log_magnitude) == 0.0);  // plain double underflows
  }
}

TEST_CASE("block embedding identity") {
  for (int trial = 0; trial < 100; ++trial) {
    const IdentityPair id = pfaffian_block_identity(random_dense(2 + trial % 4));
    CHECK(rel(id.lhs, id.rhs.value()) < 1e-10);
  }
  // X = I_2: pf = (-1)^{2*1/2} det = -1
  const IdentityPair unit = pfaffian_block_identity(Eigen::MatrixXcd::Identity(2, 2));
  CHECK(std::abs(unit.lhs.value() - Complex(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("congruence identity") {
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 2 * (1 + trial % 4);
    const IdentityPair id =
        pfaffian_congruence_identity(random_dense(order), random_skew(order));
    CHECK(rel(id.lhs, id.rhs.value()) < 1e-10);
  }

  SUBCASE("diagonal X scales by the product of the diagonal") {
    const int order = 6;
    const SkewMatrix y = random_skew(order);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(order, order);
    Complex prod{1.0, 0.0};
    for (int i = 0; i < order; ++i) {
      x(i, i) = rand_c();
      prod *= x(i, i);
    }
    const IdentityPair id = pfaffian_congruence_identity(x, y);
    CHECK(std::abs(id.rhs.value() - prod * pfaffian(y).value()) < 1e-12);
    CHECK(rel(id.lhs, id.rhs.value()) < 1e-10);
  }
}

TEST_SUITE_END();
