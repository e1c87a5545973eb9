#ifndef XYEFP_SPECTRAL_HPP
#define XYEFP_SPECTRAL_HPP

#include "xyefp/common.hpp"
#include "xyefp/model.hpp"
#include "xyefp/quadrature.hpp"

namespace xyefp {

// Spectral data of the impurity Hamiltonian h_B = h + kappa p_0 above the
// band: a single simple eigenvalue e_B = sqrt(1 + kappa^2) with an
// exponentially localized eigenfunction f_B(x) = e^{-lambda_B |x|} / n_B.
struct BoundState {
  double kappa;
  double eigenvalue;      // e_B > 1
  double decay_rate;      // lambda_B = log(kappa + e_B)
  double normalization;   // n_B = sqrt(e_B / kappa)
};

BoundState bound_state(double kappa);  // throws ConfigError for kappa <= 0

// f_B(x); even in x, positive, unit l^2 norm.
double eigenfunction(const BoundState& bs, long x);

// Fourier transform f_B^(k) = kappa / (n_B (e_B - cos k)).
double eigenfunction_hat(const BoundState& bs, double k);

// Quadrature value of i e_B (1/2pi) Int e^{-ikx} / (sin k + i kappa) dk,
// which must reproduce e^{-lambda_B x} for x >= 0 (residue identity).
Complex exp_fourier_identity(const BoundState& bs, int x,
                             const QuadratureSpec& spec = {});

// Quadratic form (f_B, s_{0,sign} f_B) of the initial density
// s_{0,sign} = (1 + e^{sign k_0})^{-1}, k_0 = beta_L h_L (+) 0 (+) beta_R h_R,
// evaluated on the truncated lattice [-window, window] by symmetric
// eigendecomposition of k_0. Rejects windows whose truncation bound
// e^{-2 lambda_B (window - N)} exceeds `tol`.
double initial_overlap(const ChainParams& p, Sign sign, int window,
                       double tol = 1e-10);

// Window satisfying the truncation bound for the requested tolerance.
int default_overlap_window(const ChainParams& p, double tol = 1e-10);

// Window-free evaluation of the same quadratic form through the sine
// diagonalization of the half-line reservoirs (the geometric sum over f_B
// samples is closed-form); exact up to quadrature error, stable for
// kappa -> 0 where the windowed route would need O(1/kappa) sites.
double initial_overlap_halfline(const ChainParams& p, Sign sign,
                                const QuadratureSpec& spec = {});

}  // namespace xyefp

#endif
