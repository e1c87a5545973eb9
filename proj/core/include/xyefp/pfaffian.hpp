#ifndef XYEFP_PFAFFIAN_HPP
#define XYEFP_PFAFFIAN_HPP

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "xyefp/common.hpp"

namespace xyefp {

// A number held as (log magnitude, unit phase) so that quantities decaying
// like e^{-Gamma n} survive far past the underflow threshold of double.
struct LogScaled {
  double log_magnitude = 0.0;
  Complex phase{1.0, 0.0};

  static LogScaled zero() {
    return {-std::numeric_limits<double>::infinity(), {1.0, 0.0}};
  }
  static LogScaled from(Complex z) {
    if (z == Complex(0.0, 0.0)) return zero();
    return {std::log(std::abs(z)), z / std::abs(z)};
  }
  bool is_zero() const { return std::isinf(log_magnitude); }
  Complex value() const { return std::exp(log_magnitude) * phase; }
  double log10_magnitude() const { return log_magnitude / std::log(10.0); }
  LogScaled& operator*=(Complex z) {
    if (is_zero()) return *this;
    if (z == Complex(0.0, 0.0)) { *this = zero(); return *this; }
    log_magnitude += std::log(std::abs(z));
    phase *= z / std::abs(z);
    return *this;
  }
  LogScaled operator*(const LogScaled& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return {log_magnitude + o.log_magnitude, phase * o.phase};
  }
};

// Skew-symmetric complex matrix of even order; only the strict upper
// triangle is stored, so A^t = -A holds structurally.
class SkewMatrix {
 public:
  explicit SkewMatrix(int order);

  int order() const { return order_; }
  Complex& upper(int i, int j);           // 0-based, requires i < j
  Complex operator()(int i, int j) const; // full antisymmetric access
  Eigen::MatrixXcd dense() const;

 private:
  int order_;
  std::vector<Complex> upper_;  // row-major strict upper triangle
};

// Pfaffian via the signed sum over the (2n)!/(2^n n!) pairings.
// Exact reference path; rejects order > 12.
LogScaled pfaffian_pairing_sum(const SkewMatrix& a);

// Pfaffian via skew-symmetric Gaussian elimination (congruence transforms)
// with partial pivoting; O(n^3), any even order.
LogScaled pfaffian_elimination(const SkewMatrix& a);

// Dispatch: pairing sum up to order 12, elimination beyond.
LogScaled pfaffian(const SkewMatrix& a);

// log det via LU with partial pivoting; singular input yields the exact
// zero sentinel rather than throwing.
LogScaled logdet(const Eigen::MatrixXcd& m);

// Both sides of pf([[0, X], [-X^t, 0]]) = (-1)^{n(n-1)/2} det(X).
struct IdentityPair {
  LogScaled lhs, rhs;
};
IdentityPair pfaffian_block_identity(const Eigen::MatrixXcd& x);

// Both sides of pf(X Y X^t) = det(X) pf(Y) for skew Y.
IdentityPair pfaffian_congruence_identity(const Eigen::MatrixXcd& x,
                                          const SkewMatrix& y);

// Embed a dense skew-symmetric matrix (validated) into SkewMatrix storage.
SkewMatrix skew_from_dense(const Eigen::MatrixXcd& m, double tol = 1e-12);

}  // namespace xyefp

#endif
