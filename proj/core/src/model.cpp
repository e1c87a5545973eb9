#include "xyefp/model.hpp"

#include <cmath>

namespace xyefp {

void ChainParams::validate() const {
  if (!(kappa > 0.0)) throw ConfigError("kappa must be strictly positive");
  if (!(beta_left >= 0.0) || !(beta_right >= 0.0) ||
      !std::isfinite(beta_left) || !std::isfinite(beta_right))
    throw ConfigError("inverse temperatures must be finite and nonnegative");
  if (beta_left > beta_right)
    throw ConfigError("expected beta_left <= beta_right");
  if ((beta_left == 0.0 || beta_right == 0.0) && !allow_infinite_temperature)
    throw ConfigError(
        "beta = 0 requires allow_infinite_temperature "
        "(physical assumption is 0 < beta_left <= beta_right)");
  if (sample_radius < 0) throw ConfigError("sample_radius must be >= 0");
}

double fermi_side(const ChainParams& p, double k, Side side, Sign sign) {
  const double beta = side == Side::left ? p.beta_left : p.beta_right;
  return 0.5 * (1.0 + sign_value(sign) * std::tanh(0.5 * beta * std::cos(k)));
}

double ness_density(const ChainParams& p, double k, Sign sign,
                    int zero_convention) {
  k = wrap_momentum(k);
  const double s = std::sin(k);
  const double sg = s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : zero_convention);
  const int sv = sign_value(sign);
  const double rho =
      std::tanh(0.5 * (p.beta_mean() + sv * sg * p.beta_bias()) * std::cos(k));
  return 0.5 * (1.0 - sv * rho);
}

ScalarSymbol ness_density_symbol(const ChainParams& p, Sign sign) {
  return {[p, sign](double k) { return Complex(ness_density(p, k, sign)); },
          {0.0}};
}

double transmission(const ChainParams& p, double k) {
  const double s2 = std::sin(k) * std::sin(k);
  return s2 / (s2 + p.kappa * p.kappa);
}

double transmission_halfline(const ChainParams& p, double k) {
  k = wrap_momentum(k);
  return k >= 0.0 ? transmission(p, k) : 0.0;
}

double toeplitz_symbol_value(const ChainParams& p, double k) {
  k = wrap_momentum(k);
  const double phi = transmission_halfline(p, k);
  return phi * fermi_side(p, k, Side::left, Sign::plus) +
         (1.0 - phi) * fermi_side(p, k, Side::right, Sign::plus);
}

namespace {

double fermi_side_derivative(double beta, double k) {
  const double t = std::tanh(0.5 * beta * std::cos(k));
  return -0.25 * beta * std::sin(k) * (1.0 - t * t);
}

double transmission_derivative(double kappa, double k) {
  const double s = std::sin(k), c = std::cos(k);
  const double d = s * s + kappa * kappa;
  return 2.0 * s * c * kappa * kappa / (d * d);
}

}  // namespace

double toeplitz_symbol_derivative(const ChainParams& p, double k) {
  k = wrap_momentum(k);
  const double dR = fermi_side_derivative(p.beta_right, k);
  if (k < 0.0) return dR;
  const double sL = fermi_side(p, k, Side::left, Sign::plus);
  const double sR = fermi_side(p, k, Side::right, Sign::plus);
  const double dL = fermi_side_derivative(p.beta_left, k);
  const double sig = transmission(p, k);
  return transmission_derivative(p.kappa, k) * (sL - sR) + sig * dL +
         (1.0 - sig) * dR;
}

ScalarSymbol toeplitz_symbol(const ChainParams& p) {
  return {[p](double k) { return Complex(toeplitz_symbol_value(p, k)); },
          {0.0}};
}

}  // namespace xyefp
