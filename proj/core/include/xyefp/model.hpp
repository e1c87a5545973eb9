#ifndef XYEFP_MODEL_HPP
#define XYEFP_MODEL_HPP

#include <functional>
#include <vector>

#include "xyefp/common.hpp"

namespace xyefp {

// Physical configuration of the two-reservoir chain with a magnetic
// impurity of strength kappa at the origin.
//
// The chain is cut into a sample {-N..N} and two half-infinite reservoirs
// prepared at inverse temperatures beta_left / beta_right; the observable is
// the probability that the n sites starting at `string_start` are empty.
struct ChainParams {
  double beta_left = 0.5;
  double beta_right = 2.0;
  double kappa = 0.2;
  int string_start = 1;   // first site of the observed string (x0)
  int sample_radius = 0;  // N, half-width of the decoupled sample block
  // beta = 0 is outside the physical assumption 0 < beta_left <= beta_right;
  // it is admitted for tests when this flag is set.
  bool allow_infinite_temperature = false;

  double beta_mean() const { return 0.5 * (beta_right + beta_left); }
  double beta_bias() const { return 0.5 * (beta_right - beta_left); }
  bool equilibrium() const { return beta_left == beta_right; }

  void validate() const;  // throws ConfigError
};

// A piecewise-smooth function on momentum space (-pi, pi]. `breakpoints`
// lists the interior momenta where smoothness may fail (the +-pi
// identification point is always an implicit panel edge). Evaluators accept
// exactly +-pi and give equal values there.
struct ScalarSymbol {
  std::function<Complex(double)> evaluate;
  std::vector<double> breakpoints;
};

// Reservoir Fermi factor s_{sign,side}(k) = (1 + sign*tanh(beta/2 cos k))/2.
double fermi_side(const ChainParams& p, double k, Side side, Sign sign);

// Steady-state density component of the translation-invariant chain.
// The `zero_convention` argument fixes sign(sin k) on the measure-zero set
// sin k = 0; any value in {-1,0,+1} leaves every integral unchanged.
double ness_density(const ChainParams& p, double k, Sign sign,
                    int zero_convention = 0);

ScalarSymbol ness_density_symbol(const ChainParams& p, Sign sign);

// Impurity transmission weight sigma_B(k) = sin^2 k / (sin^2 k + kappa^2),
// and its half-line restriction phi_B = chi_[0,pi] * sigma_B.
double transmission(const ChainParams& p, double k);
double transmission_halfline(const ChainParams& p, double k);

// Symbol of the Toeplitz part of the reduced correlation matrix,
//   a = phi_B s_{+,L} + (1 - phi_B) s_{+,R},
// real-valued with range [s_{-,R}(0), s_{+,R}(0)] and breakpoints {0, pi}
// where it stays C^1 but a'' jumps.
double toeplitz_symbol_value(const ChainParams& p, double k);
double toeplitz_symbol_derivative(const ChainParams& p, double k);
ScalarSymbol toeplitz_symbol(const ChainParams& p);

}  // namespace xyefp

#endif
