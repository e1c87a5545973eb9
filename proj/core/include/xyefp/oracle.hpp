#ifndef XYEFP_ORACLE_HPP
#define XYEFP_ORACLE_HPP

#include <Eigen/Dense>

#include "xyefp/model.hpp"

namespace xyefp {

// Finite-volume brute-force check of the steady-state results: exact
// quasifree dynamics on the lattice [-M, M] with a Cesaro time average.
// The hard wall is inert as long as the light cone (unit group velocity)
// from the boundary cannot reach the observed string within the horizon.
struct FiniteVolumeSpec {
  int window_radius = 300;      // M
  double horizon = 150.0;       // T
  int samples = 256;            // time samples in the averaged window
  double averaging_start = 0.5; // fraction of the horizon to discard

  void validate(const ChainParams& p, int n) const;  // throws ConfigError
};

struct Hamiltonians {
  Eigen::MatrixXd full;       // h: nearest-neighbor hopping, 1/2 couplings
  Eigen::MatrixXd decoupled;  // h0: bonds -(N+1)<->-N and N<->N+1 removed
  Eigen::MatrixXd magnetic;   // hB = h + kappa at the origin
};

Hamiltonians build_hamiltonians(const FiniteVolumeSpec& spec,
                                const ChainParams& p);

// s_{0,sign} = (1 + e^{sign k_0})^{-1} with
// k_0 = beta_L h_L (+) 0 (+) beta_R h_R on the truncated lattice.
Eigen::MatrixXd initial_density(const FiniteVolumeSpec& spec,
                                const ChainParams& p, Sign sign);

// Owns the one-time eigendecomposition of hB and the two initial densities;
// every time sample reuses them.
class FiniteVolumeSimulator {
 public:
  FiniteVolumeSimulator(FiniteVolumeSpec spec, ChainParams params);

  const FiniteVolumeSpec& spec() const { return spec_; }

  // Theta_n(t): b_{ij}(t) for i <= j and -c_{ji}(t) for i > j, with
  //   b_{ij}(t) = (e^{ith_B} d_{i'}, s_{0,-} e^{ith_B} d_{j'})
  //   c_{ij}(t) = (e^{-ith_B} d_{i'}, s_{0,+} e^{-ith_B} d_{j'}).
  // Refuses times outside the light-cone bound.
  Eigen::MatrixXcd theta_at_time(double t, int n) const;

  // Trapezoid Cesaro mean of det Theta_n(t) over the deterministic
  // equispaced grid on [start*T, T]. The averaged imaginary part must
  // vanish to 1e-8 (checked), the real part is returned.
  double efp_time_average(int n) const;
  double efp_time_average(int n, double horizon, int samples,
                          double averaging_start) const;

  // Eigenvalue of hB nearest above the band edge +1.
  double magnetic_eigenvalue_above_band() const;

 private:
  FiniteVolumeSpec spec_;
  ChainParams params_;
  Eigen::MatrixXcd hb_vectors_;
  Eigen::VectorXd hb_values_;
  Eigen::MatrixXcd s0_minus_;
  Eigen::MatrixXcd s0_plus_;
};

double efp_time_average(int n, const FiniteVolumeSpec& spec,
                        const ChainParams& p);

}  // namespace xyefp

#endif
