#include "xyefp/szego.hpp"

#include <cmath>

#include "xyefp/spectral.hpp"

namespace xyefp {

Complex fourier_coefficient(const ScalarSymbol& s, long m,
                            const QuadratureSpec& spec) {
  auto f = [&s, m](double k) {
    return s.evaluate(k) * std::exp(-iu * (static_cast<double>(m) * k));
  };
  return integrate_circle_or_throw(f, s.breakpoints,
                                   static_cast<double>(std::labs(m)), spec);
}

FourierTable::FourierTable(ScalarSymbol symbol, QuadratureSpec spec)
    : symbol_(std::move(symbol)), spec_(spec) {}

Complex FourierTable::operator()(long m) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  const Complex value = fourier_coefficient(symbol_, m, spec_);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(m, value);
  return value;
}

Eigen::MatrixXcd toeplitz_section(const ScalarSymbol& s, int n,
                                  const QuadratureSpec& spec) {
  if (n < 1) throw ConfigError("section order must be >= 1");
  std::vector<Complex> coeff(2 * n - 1);
  for (int m = -(n - 1); m <= n - 1; ++m)
    coeff[m + n - 1] = fourier_coefficient(s, m, spec);
  Eigen::MatrixXcd t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = coeff[i - j + n - 1];
  return t;
}

Eigen::MatrixXcd hankel_section(const ScalarSymbol& s, int n,
                                const QuadratureSpec& spec) {
  if (n < 1) throw ConfigError("section order must be >= 1");
  std::vector<Complex> coeff(2 * n);  // indices 1 .. 2n-1
  for (int m = 1; m <= 2 * n - 1; ++m)
    coeff[m] = fourier_coefficient(s, m, spec);
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = coeff[i + j + 1];
  return h;
}

ScalarSymbol hankel_symbol(const ChainParams& p, HankelMode mode,
                           const QuadratureSpec& spec) {
  p.validate();
  const BoundState bs = bound_state(p.kappa);
  double bracket = initial_overlap_halfline(p, Sign::minus, spec);
  if (mode == HankelMode::A) bracket /= bs.eigenvalue * bs.eigenvalue;
  const double kap = p.kappa;
  const int x0 = p.string_start;
  auto eval = [p, bracket, kap, x0](double k) {
    k = wrap_momentum(k);
    return iu * kap * std::exp(-iu * ((2.0 * x0 - 1.0) * k)) /
           (std::sin(k) + iu * kap) *
           (bracket - fermi_side(p, k, Side::right, Sign::plus));
  };
  return {eval, {}};
}

GeometricMean geometric_mean(const ScalarSymbol& s,
                             const QuadratureSpec& spec) {
  // log needs a strictly positive real symbol; probe a fine grid first
  for (int i = 0; i <= 4096; ++i) {
    const double k = -pi + 2.0 * pi * i / 4096.0;
    const Complex v = s.evaluate(k);
    if (!(v.real() > 0.0) || std::abs(v.imag()) > 1e-12 * (1.0 + v.real()))
      throw ConfigError("geometric mean requires a strictly positive symbol");
  }
  auto f = [&s](double k) { return Complex(std::log(s.evaluate(k).real())); };
  const Complex integral =
      integrate_circle_or_throw(f, s.breakpoints, 0.0, spec);
  return {std::exp(integral.real()), -integral.real()};
}

namespace {

// Defining form: -1/2 Int dk/2pi log m(k) over the full circle.
double rate_full(const std::function<double(double)>& m,
                 const QuadratureSpec& spec) {
  auto f = [&m](double k) { return Complex(std::log(m(k))); };
  return -0.5 * integrate_circle_or_throw(f, {0.0}, 0.0, spec).real();
}

// Folded rewrite: -Int_0^{pi/2} dk/2pi log[(1/4)(1 - q(k)^2)], obtained by
// pairing k with pi - k in the defining integral.
double rate_folded(const std::function<double(double)>& q,
                   const QuadratureSpec& spec) {
  auto f = [&q](double k) {
    const double t = q(k);
    return Complex(std::log(0.25 * (1.0 - t * t)));
  };
  QuadratureResult r =
      integrate_panels(f, {0.0, 0.125 * pi, 0.25 * pi, 0.375 * pi, 0.5 * pi},
                       spec);
  if (!r.converged)
    throw QuadratureError("decay-rate quadrature did not converge",
                          r.error_estimate);
  return -r.value.real() / (2.0 * pi);
}

}  // namespace

DecayRates decay_rates(const ChainParams& p, const QuadratureSpec& spec) {
  p.validate();
  auto mixture = [&p](double k) {
    const double sig = transmission(p, k);
    return sig * fermi_side(p, k, Side::left, Sign::minus) +
           (1.0 - sig) * fermi_side(p, k, Side::right, Sign::minus);
  };
  const double gl =
      rate_full([&p](double k) { return fermi_side(p, k, Side::left, Sign::minus); },
                spec);
  const double gr =
      rate_full([&p](double k) { return fermi_side(p, k, Side::right, Sign::minus); },
                spec);
  const double gb = rate_full(mixture, spec);

  // cross-check against the folded forms
  auto tanh_side = [](double beta) {
    return [beta](double k) { return std::tanh(0.5 * beta * std::cos(k)); };
  };
  auto tanh_mixture = [&p](double k) {
    const double sig = transmission(p, k);
    return (1.0 - sig) * std::tanh(0.5 * p.beta_right * std::cos(k)) +
           sig * std::tanh(0.5 * p.beta_left * std::cos(k));
  };
  const double gl2 = rate_folded(tanh_side(p.beta_left), spec);
  const double gr2 = rate_folded(tanh_side(p.beta_right), spec);
  const double gb2 = rate_folded(tanh_mixture, spec);
  const double dev = std::max({std::abs(gl - gl2), std::abs(gr - gr2),
                               std::abs(gb - gb2)});
  if (dev > 1e-10)
    throw NumericalError("decay-rate rewrite cross-check failed (dev " +
                         std::to_string(dev) + ")");

  return {gl, gr, gb, gr + gb};
}

JumpDiagnostic symbol_jump_diagnostic(const ChainParams& p) {
  p.validate();
  const double h = 1e-3;
  auto ap = [&p](double k) { return toeplitz_symbol_derivative(p, k); };
  auto forward = [&](double k0) {
    return (-25.0 * ap(k0) + 48.0 * ap(k0 + h) - 36.0 * ap(k0 + 2 * h) +
            16.0 * ap(k0 + 3 * h) - 3.0 * ap(k0 + 4 * h)) /
           (12.0 * h);
  };
  auto backward = [&](double k0) {
    return (25.0 * ap(k0) - 48.0 * ap(k0 - h) + 36.0 * ap(k0 - 2 * h) -
            16.0 * ap(k0 - 3 * h) + 3.0 * ap(k0 - 4 * h)) /
           (12.0 * h);
  };
  const double predicted =
      (1.0 / (p.kappa * p.kappa)) *
      std::sinh(0.5 * (p.beta_right - p.beta_left)) /
      (std::cosh(0.5 * p.beta_right) * std::cosh(0.5 * p.beta_left));
  return {forward(0.0) - backward(0.0), forward(pi) - backward(pi),
          predicted};
}

AsymptoticProfile profile_from_log_values(const std::vector<double>& log_p,
                                          double log_geometric_mean) {
  AsymptoticProfile out;
  out.log_geometric_mean = log_geometric_mean;
  out.log_ratio.reserve(log_p.size());
  for (std::size_t i = 0; i < log_p.size(); ++i)
    out.log_ratio.push_back(log_p[i] -
                            static_cast<double>(i + 1) * log_geometric_mean);
  for (std::size_t i = 0; i + 1 < out.log_ratio.size(); ++i) {
    const double r0 = std::exp(out.log_ratio[i]);
    const double r1 = std::exp(out.log_ratio[i + 1]);
    out.rel_increment.push_back(std::abs(r1 - r0) / std::abs(r0));
  }
  out.empirical_constant =
      out.log_ratio.empty() ? 0.0 : std::exp(out.log_ratio.back());
  return out;
}

AsymptoticProfile asymptotic_profile(const ChainParams& p, int n_max,
                                     HankelMode mode,
                                     const QuadratureSpec& spec) {
  p.validate();
  if (n_max < 1 || n_max > 400)
    throw ConfigError("asymptotic_profile supports 1 <= n_max <= 400");
  if (p.string_start < 0)
    throw ConfigError(
        "asymptotic_profile uses the structured sections; string_start >= 0 "
        "required (assemble the general case through the correlation module)");

  const FourierTable a_hat(toeplitz_symbol(p), spec);
  const FourierTable b_hat(hankel_symbol(p, mode, spec), spec);
  std::vector<double> log_p(n_max);
  Eigen::MatrixXcd theta(n_max, n_max);
  for (int i = 1; i <= n_max; ++i)
    for (int j = 1; j <= n_max; ++j)
      theta(i - 1, j - 1) = a_hat(i - j) + b_hat(i + j - 1);
  for (int n = 1; n <= n_max; ++n) {
    const LogScaled det = logdet(theta.topLeftCorner(n, n));
    if (std::abs(std::arg(det.phase)) > 1e-6)
      throw NumericalError("structured determinant drifted off the real axis");
    log_p[n - 1] = det.log_magnitude;
  }
  const GeometricMean g = geometric_mean(toeplitz_symbol(p), spec);
  return profile_from_log_values(log_p, std::log(g.value));
}

double fitted_decay_slope(const std::vector<double>& log_p, int n_lo,
                          int n_hi) {
  if (n_lo < 1 || n_hi > static_cast<int>(log_p.size()) || n_lo >= n_hi)
    throw ConfigError("invalid slope-fit range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int count = n_hi - n_lo + 1;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double x = n, y = -log_p[n - 1];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace xyefp
