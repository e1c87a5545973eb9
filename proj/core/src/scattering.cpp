#include "xyefp/scattering.hpp"

#include <cmath>

namespace xyefp {

Complex resolvent_boundary(double e, long x, Sign side) {
  if (!(std::abs(e) < 1.0))
    throw ConfigError("resolvent boundary values require |e| < 1");
  const double root = std::sqrt(1.0 - e * e);
  const int sv = sign_value(side);
  const Complex base = e - static_cast<double>(sv) * iu * root;
  return static_cast<double>(sv) * iu *
         std::pow(base, static_cast<double>(std::labs(x))) / root;
}

Complex wave_action(double k, long x, Sign branch, const BoundState& bs) {
  k = wrap_momentum(k);
  const double ak = std::abs(k);
  const double axd = static_cast<double>(std::labs(x));
  const int sv = sign_value(branch);
  const Complex direct = std::exp(iu * (k * static_cast<double>(x)));
  const Complex scattered = std::exp(-static_cast<double>(sv) * iu * ak * axd);
  return direct - static_cast<double>(sv) * iu * bs.kappa * scattered /
                      (std::sin(ak) + static_cast<double>(sv) * iu * bs.kappa);
}

FiberPair energy_transform(const std::function<Complex(double)>& phi,
                           double e) {
  if (!(std::abs(e) < 1.0))
    throw ConfigError("energy transform requires |e| < 1");
  const double theta = std::acos(e);
  const double pref =
      1.0 / std::sqrt(2.0 * pi) / std::pow(1.0 - e * e, 0.25);
  return {pref * phi(theta), pref * phi(-theta)};
}

Complex energy_transform_inverse(const std::function<FiberPair(double)>& eta,
                                 double k) {
  k = wrap_momentum(k);
  const double c = std::cos(k);
  const double pref =
      std::sqrt(2.0 * pi) * std::pow(1.0 - c * c, 0.25);
  const FiberPair fiber = eta(c);
  return pref * (k >= 0.0 ? fiber.first : fiber.second);
}

FiberPair wave_action_energy(double e, long x, Sign branch,
                             const BoundState& bs) {
  if (!(std::abs(e) < 1.0))
    throw ConfigError("wave_action_energy requires |e| < 1");
  const double root = std::sqrt(1.0 - e * e);
  const double pref =
      1.0 / std::sqrt(2.0 * pi) / std::pow(1.0 - e * e, 0.25);
  const int sv = sign_value(branch);
  const double xd = static_cast<double>(x);
  const double axd = static_cast<double>(std::labs(x));
  const Complex up = std::pow(Complex(e, root), xd);
  const Complex down = std::pow(Complex(e, -root), xd);
  const Complex corr =
      static_cast<double>(sv) * iu * bs.kappa *
      std::pow(Complex(e, -sv * root), axd) /
      (root + static_cast<double>(sv) * iu * bs.kappa);
  return {pref * (up - corr), pref * (down - corr)};
}

}  // namespace xyefp
