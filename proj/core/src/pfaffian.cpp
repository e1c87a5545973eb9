#include "xyefp/pfaffian.hpp"

#include <cmath>

namespace xyefp {

SkewMatrix::SkewMatrix(int order) : order_(order) {
  if (order <= 0 || order % 2 != 0)
    throw ConfigError("skew matrix order must be even and positive");
  upper_.assign(static_cast<std::size_t>(order) * (order - 1) / 2,
                Complex(0.0, 0.0));
}

namespace {
inline std::size_t upper_index(int n, int i, int j) {
  // offset of (i, j), i < j, in the row-major strict upper triangle
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}
}  // namespace

Complex& SkewMatrix::upper(int i, int j) {
  if (!(0 <= i && i < j && j < order_))
    throw ConfigError("upper() requires 0 <= i < j < order");
  return upper_[upper_index(order_, i, j)];
}

Complex SkewMatrix::operator()(int i, int j) const {
  if (i == j) return {0.0, 0.0};
  if (i < j) return upper_[upper_index(order_, i, j)];
  return -upper_[upper_index(order_, j, i)];
}

Eigen::MatrixXcd SkewMatrix::dense() const {
  Eigen::MatrixXcd m(order_, order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

namespace {

// Recursive expansion along the first remaining row:
// pf(A) = sum_j (-1)^j A(i0, ij) pf(A without rows/cols i0, ij).
Complex pairing_sum(const SkewMatrix& a, std::vector<int>& live) {
  const std::size_t m = live.size();
  if (m == 0) return {1.0, 0.0};
  const int i0 = live[0];
  Complex total{0.0, 0.0};
  double sign = 1.0;
  for (std::size_t jpos = 1; jpos < m; ++jpos) {
    const int j = live[jpos];
    std::vector<int> rest;
    rest.reserve(m - 2);
    for (std::size_t t = 1; t < m; ++t)
      if (t != jpos) rest.push_back(live[t]);
    total += sign * a(i0, j) * pairing_sum(a, rest);
    sign = -sign;
  }
  return total;
}

}  // namespace

LogScaled pfaffian_pairing_sum(const SkewMatrix& a) {
  if (a.order() > 12)
    throw ConfigError("pairing-sum pfaffian limited to order <= 12");
  std::vector<int> live(a.order());
  for (int i = 0; i < a.order(); ++i) live[i] = i;
  return LogScaled::from(pairing_sum(a, live));
}

LogScaled pfaffian_elimination(const SkewMatrix& a) {
  const int n = a.order();
  Eigen::MatrixXcd m = a.dense();
  LogScaled result{0.0, {1.0, 0.0}};
  for (int k = 0; k + 1 < n; k += 2) {
    // pivot: largest |m(k, i)| for i > k
    int piv = k + 1;
    double best = std::abs(m(k, k + 1));
    for (int i = k + 2; i < n; ++i)
      if (std::abs(m(k, i)) > best) {
        best = std::abs(m(k, i));
        piv = i;
      }
    if (best == 0.0) return LogScaled::zero();
    if (piv != k + 1) {
      m.row(k + 1).swap(m.row(piv));
      m.col(k + 1).swap(m.col(piv));
      result *= Complex(-1.0, 0.0);
    }
    const Complex pivot = m(k, k + 1);
    result *= pivot;
    // congruence G A G^t with G = I - f e_i e_{k+1}^t zeroes m(k, i)
    for (int i = k + 2; i < n; ++i) {
      const Complex f = m(k, i) / pivot;
      if (f == Complex(0.0, 0.0)) continue;
      m.row(i) -= f * m.row(k + 1);
      m.col(i) -= f * m.col(k + 1);
    }
  }
  return result;
}

LogScaled pfaffian(const SkewMatrix& a) {
  return a.order() <= 12 ? pfaffian_pairing_sum(a) : pfaffian_elimination(a);
}

LogScaled logdet(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ConfigError("logdet requires a square matrix");
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  LogScaled result{0.0, {1.0, 0.0}};
  result *= Complex(static_cast<double>(lu.permutationP().determinant()), 0.0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex u = lu.matrixLU()(i, i);
    if (u == Complex(0.0, 0.0)) return LogScaled::zero();
    result *= u;
  }
  return result;
}

SkewMatrix skew_from_dense(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols())
    throw ConfigError("skew_from_dense requires a square matrix");
  const int n = static_cast<int>(m.rows());
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol)
    throw ConfigError("matrix is not skew-symmetric");
  SkewMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.upper(i, j) = m(i, j);
  return a;
}

IdentityPair pfaffian_block_identity(const Eigen::MatrixXcd& x) {
  const int n = static_cast<int>(x.rows());
  SkewMatrix a(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.upper(i, n + j) = x(i, j);
  LogScaled lhs = pfaffian(a);
  LogScaled rhs = logdet(x);
  rhs *= Complex((n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0, 0.0);
  return {lhs, rhs};
}

IdentityPair pfaffian_congruence_identity(const Eigen::MatrixXcd& x,
                                          const SkewMatrix& y) {
  const Eigen::MatrixXcd transformed = x * y.dense() * x.transpose();
  // symmetrize away round-off before re-validating skewness
  const Eigen::MatrixXcd clean =
      0.5 * (transformed - transformed.transpose());
  LogScaled lhs = pfaffian(skew_from_dense(clean, 1e-9));
  LogScaled rhs = logdet(x) * pfaffian(y);
  return {lhs, rhs};
}

}  // namespace xyefp
