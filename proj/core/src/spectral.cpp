#include "xyefp/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace xyefp {

BoundState bound_state(double kappa) {
  if (!(kappa > 0.0))
    throw ConfigError("bound state exists only for kappa > 0");
  const double eb = std::sqrt(1.0 + kappa * kappa);
  return {kappa, eb, std::log(kappa + eb), std::sqrt(eb / kappa)};
}

double eigenfunction(const BoundState& bs, long x) {
  return std::exp(-bs.decay_rate * static_cast<double>(std::labs(x))) /
         bs.normalization;
}

double eigenfunction_hat(const BoundState& bs, double k) {
  return bs.kappa / (bs.normalization * (bs.eigenvalue - std::cos(k)));
}

Complex exp_fourier_identity(const BoundState& bs, int x,
                             const QuadratureSpec& spec) {
  if (x < 0) throw ConfigError("exp_fourier_identity requires x >= 0");
  const double kap = bs.kappa;
  auto f = [kap, x](double k) {
    return std::exp(-iu * (static_cast<double>(x) * k)) /
           (std::sin(k) + iu * kap);
  };
  return iu * bs.eigenvalue *
         integrate_circle_or_throw(f, {0.0}, std::abs(x), spec);
}

int default_overlap_window(const ChainParams& p, double tol) {
  const BoundState bs = bound_state(p.kappa);
  const double w = std::ceil(std::log(1.0 / tol) / (2.0 * bs.decay_rate));
  return static_cast<int>(w) + p.sample_radius + 10;
}

double initial_overlap(const ChainParams& p, Sign sign, int window,
                       double tol) {
  p.validate();
  const BoundState bs = bound_state(p.kappa);
  const int n = p.sample_radius;
  if (window < n + 10)
    throw ConfigError("overlap window must be at least sample_radius + 10");
  if (std::exp(-2.0 * bs.decay_rate * (window - n)) > tol)
    throw ConfigError("overlap window too small for requested tolerance");

  const int dim = 2 * window + 1;
  auto site = [window](int x) { return x + window; };
  Eigen::MatrixXd k0 = Eigen::MatrixXd::Zero(dim, dim);
  for (int x = -window; x < window; ++x) {
    double beta = 0.0;
    if (x + 1 <= -(n + 1)) beta = p.beta_left;   // bond fully in left block
    if (x >= n + 1) beta = p.beta_right;         // bond fully in right block
    k0(site(x), site(x + 1)) = k0(site(x + 1), site(x)) = 0.5 * beta;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k0);
  Eigen::VectorXd f(dim);
  for (int x = -window; x <= window; ++x) f(site(x)) = eigenfunction(bs, x);
  const Eigen::VectorXd c = es.eigenvectors().transpose() * f;
  const int sv = sign_value(sign);
  double total = 0.0;
  for (int a = 0; a < dim; ++a)
    total += c(a) * c(a) / (1.0 + std::exp(sv * es.eigenvalues()(a)));
  return total;
}

double initial_overlap_halfline(const ChainParams& p, Sign sign,
                                const QuadratureSpec& spec) {
  p.validate();
  const BoundState bs = bound_state(p.kappa);
  const int n = p.sample_radius;
  const int sv = sign_value(sign);

  // Sample block: the density is exactly 1/2 there.
  double total = 0.5 * eigenfunction(bs, 0) * eigenfunction(bs, 0);
  for (int x = 1; x <= n; ++x)
    total += eigenfunction(bs, x) * eigenfunction(bs, x);  // both signs of x

  // Each reservoir is a half-line hopping chain, diagonalized by
  // sin(k m) with energy cos k; the f_B sample sum is a geometric series.
  const double lam = bs.decay_rate;
  auto amplitude = [&](double k) {
    const Complex z = std::exp(Complex(-lam, k));
    return std::exp(-lam * n) / bs.normalization * (z / (1.0 - z)).imag();
  };
  for (double beta : {p.beta_left, p.beta_right}) {
    auto f = [&, beta](double k) {
      const double s = amplitude(k);
      return Complex(2.0 / pi * s * s /
                     (1.0 + std::exp(sv * beta * std::cos(k))));
    };
    QuadratureResult r = integrate_panels(
        f, {0.0, 0.25 * pi, 0.5 * pi, 0.75 * pi, pi}, spec);
    if (!r.converged)
      throw QuadratureError("overlap quadrature did not converge",
                            r.error_estimate);
    total += r.value.real();
  }
  return total;
}

}  // namespace xyefp
