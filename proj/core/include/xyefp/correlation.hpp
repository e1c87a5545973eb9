#ifndef XYEFP_CORRELATION_HPP
#define XYEFP_CORRELATION_HPP

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "xyefp/pfaffian.hpp"
#include "xyefp/scattering.hpp"
#include "xyefp/szego.hpp"

namespace xyefp {

// Reduced n x n correlation matrix Theta_n of the emptiness observable;
// P(n) = det(Theta_n).
struct ReducedCorrelation {
  enum class Provenance { direct, structured };
  Eigen::MatrixXcd theta;
  Provenance provenance;
};

// Assembles steady-state correlation entries for one parameter set.
// Entries depend on (i, j) only through the shifted sites i' = i + x0 - 1,
// j' = j + x0 - 1, so a per-assembler cache keyed by (i-j, i+j, branch) is
// shared across all section sizes n.
class NessAssembler {
 public:
  explicit NessAssembler(ChainParams p, QuadratureSpec spec = {});

  const ChainParams& params() const { return params_; }
  double overlap(Sign sign) const;

  // theta_{ij}, 1-based: b_{ij} for i <= j, -c_{ji} for i > j, where
  //   b_{ij} = (w_- d_{i'}, s_- w_- d_{j'}) + f_B(i') f_B(j') (f_B,s_{0,-}f_B)
  //   c_{ij} = (w_+ d_{i'}, s_+ w_+ d_{j'}) + f_B(i') f_B(j') (f_B,s_{0,+}f_B)
  Complex theta_entry(int i, int j) const;

  ReducedCorrelation assemble(int n) const;

  // Toeplitz + Hankel assembly. For x0 >= 0 every entry is
  // a^_{i-j} + b^_{i+j-1}; for x0 < 0 (requires n > -x0) the same formula
  // fills the lower-right block past n0 = -x0 and the first n0 rows/columns
  // fall back to direct entries (the finite-rank remainder).
  ReducedCorrelation assemble_structured(
      int n, HankelMode mode = default_hankel_mode) const;

  // Remainder Theta_n - [0 (+) (T+H) block] for x0 < 0; numerical rank
  // is at most 2 n0.
  Eigen::MatrixXcd structured_remainder(
      int n, HankelMode mode = default_hankel_mode) const;

  // Full 2n x 2n skew-symmetric correlation matrix with the checkerboard
  // zero pattern; pf equals det(Theta_n).
  SkewMatrix full_skew(int n) const;

  // P(n) as a log-scaled determinant of the direct assembly. The phase must
  // sit on the positive real axis to 1e-8, otherwise the assembly is
  // inconsistent and a NumericalError is raised.
  LogScaled efp(int n) const;

 private:
  Complex correlation_pair(int i, int j, Sign branch) const;
  const FourierTable& hankel_table(HankelMode mode) const;

  ChainParams params_;
  QuadratureSpec spec_;
  BoundState bs_;
  double overlap_minus_;
  double overlap_plus_;
  std::unique_ptr<FourierTable> toeplitz_table_;
  mutable std::unique_ptr<FourierTable> hankel_table_a_;
  mutable std::unique_ptr<FourierTable> hankel_table_b_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, int, int>, Complex> cache_;
};

// Free-function forms of the operations above.
Complex theta_entry_direct(int i, int j, const ChainParams& p,
                           const QuadratureSpec& spec = {});
ReducedCorrelation assemble_theta(int n, const ChainParams& p,
                                  const QuadratureSpec& spec = {});
ReducedCorrelation assemble_theta_structured(
    int n, const ChainParams& p, HankelMode mode = default_hankel_mode,
    const QuadratureSpec& spec = {});
SkewMatrix assemble_full_skew(int n, const ChainParams& p,
                              const QuadratureSpec& spec = {});
LogScaled efp(int n, const ChainParams& p, const QuadratureSpec& spec = {});

}  // namespace xyefp

#endif
