#ifndef XYEFP_COMMON_HPP
#define XYEFP_COMMON_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xyefp {

using Complex = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr Complex iu{0.0, 1.0};

// Base of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid physical parameters or run configuration (CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

// Numerical failure: quadrature non-convergence, determinant phase drift,
// light-cone violation (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

struct QuadratureError : NumericalError {
  QuadratureError(const std::string& what, double achieved)
      : NumericalError(what), achieved_error(achieved) {}
  double achieved_error;
};

// Two-valued sign used for density components, wave-operator branches and
// the two reservoirs' Fermi factors.
enum class Sign { minus, plus };

inline constexpr int sign_value(Sign s) { return s == Sign::plus ? +1 : -1; }
inline constexpr Sign opposite(Sign s) {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

enum class Side { left, right };

// Map k to the fundamental domain (-pi, pi].
inline double wrap_momentum(double k) {
  while (k <= -pi) k += 2.0 * pi;
  while (k > pi) k -= 2.0 * pi;
  return k;
}

}  // namespace xyefp

#endif
