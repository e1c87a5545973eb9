#include "xyefp/correlation.hpp"

#include <cmath>

namespace xyefp {

NessAssembler::NessAssembler(ChainParams p, QuadratureSpec spec)
    : params_(std::move(p)), spec_(spec), bs_(bound_state(params_.kappa)) {
  params_.validate();
  overlap_minus_ = initial_overlap_halfline(params_, Sign::minus, spec_);
  overlap_plus_ = initial_overlap_halfline(params_, Sign::plus, spec_);
  toeplitz_table_ =
      std::make_unique<FourierTable>(toeplitz_symbol(params_), spec_);
}

double NessAssembler::overlap(Sign sign) const {
  return sign == Sign::minus ? overlap_minus_ : overlap_plus_;
}

const FourierTable& NessAssembler::hankel_table(HankelMode mode) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = mode == HankelMode::A ? hankel_table_a_ : hankel_table_b_;
  if (!slot)
    slot = std::make_unique<FourierTable>(hankel_symbol(params_, mode, spec_),
                                          spec_);
  return *slot;
}

Complex NessAssembler::correlation_pair(int i, int j, Sign branch) const {
  const int x0 = params_.string_start;
  const long ip = i + x0 - 1;
  const long jp = j + x0 - 1;
  const int key_branch = sign_value(branch);
  const std::tuple<int, int, int> key{i - j, i + j, key_branch};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const ChainParams& p = params_;
  const BoundState& bs = bs_;
  auto integrand = [&p, &bs, ip, jp, branch](double k) {
    return std::conj(wave_action(k, ip, branch, bs)) *
           ness_density(p, k, branch) * wave_action(k, jp, branch, bs);
  };
  const double freq =
      static_cast<double>(std::labs(ip)) + static_cast<double>(std::labs(jp));
  const Complex ac = integrate_circle_or_throw(integrand, {0.0}, freq, spec_);
  const Complex value = ac + eigenfunction(bs, ip) * eigenfunction(bs, jp) *
                                 overlap(branch);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

Complex NessAssembler::theta_entry(int i, int j) const {
  if (i < 1 || j < 1) throw ConfigError("matrix indices are 1-based");
  if (i <= j) return correlation_pair(i, j, Sign::minus);
  return -correlation_pair(j, i, Sign::plus);
}

ReducedCorrelation NessAssembler::assemble(int n) const {
  if (n < 1) throw ConfigError("section order must be >= 1");
  Eigen::MatrixXcd theta(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) theta(i - 1, j - 1) = theta_entry(i, j);
  return {std::move(theta), ReducedCorrelation::Provenance::direct};
}

ReducedCorrelation NessAssembler::assemble_structured(int n,
                                                      HankelMode mode) const {
  if (n < 1) throw ConfigError("section order must be >= 1");
  const int x0 = params_.string_start;
  const int n0 = x0 < 0 ? -x0 : 0;
  if (x0 < 0 && n <= n0)
    throw ConfigError("structured assembly with x0 < 0 requires n > -x0");
  const FourierTable& a_hat = *toeplitz_table_;
  const FourierTable& b_hat = hankel_table(mode);
  Eigen::MatrixXcd theta(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i > n0 && j > n0)
        theta(i - 1, j - 1) = a_hat(i - j) + b_hat(i + j - 1);
      else
        theta(i - 1, j - 1) = theta_entry(i, j);
    }
  return {std::move(theta), ReducedCorrelation::Provenance::structured};
}

Eigen::MatrixXcd NessAssembler::structured_remainder(int n,
                                                     HankelMode mode) const {
  const int x0 = params_.string_start;
  const int n0 = x0 < 0 ? -x0 : 0;
  if (n <= n0) throw ConfigError("remainder requires n > -x0");
  const FourierTable& a_hat = *toeplitz_table_;
  const FourierTable& b_hat = hankel_table(mode);
  Eigen::MatrixXcd m = assemble(n).theta;
  for (int i = n0 + 1; i <= n; ++i)
    for (int j = n0 + 1; j <= n; ++j)
      m(i - 1, j - 1) -= a_hat(i - j) + b_hat(i + j - 1);
  return m;
}

SkewMatrix NessAssembler::full_skew(int n) const {
  if (n < 1) throw ConfigError("section order must be >= 1");
  SkewMatrix omega(2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      // (2i-1, 2j) holds b_{ij}; (2i, 2j-1) holds c_{ij} for i < j;
      // (odd, odd) and (even, even) positions vanish identically.
      omega.upper(2 * i - 2, 2 * j - 1) = correlation_pair(i, j, Sign::minus);
      if (i < j)
        omega.upper(2 * i - 1, 2 * j - 2) = correlation_pair(i, j, Sign::plus);
    }
  return omega;
}

LogScaled NessAssembler::efp(int n) const {
  const LogScaled det = logdet(assemble(n).theta);
  if (!det.is_zero() && std::abs(std::arg(det.phase)) > 1e-8)
    throw NumericalError(
        "emptiness probability determinant is not real-positive (phase " +
        std::to_string(std::arg(det.phase)) + "); assembly inconsistent");
  return det;
}

Complex theta_entry_direct(int i, int j, const ChainParams& p,
                           const QuadratureSpec& spec) {
  return NessAssembler(p, spec).theta_entry(i, j);
}

ReducedCorrelation assemble_theta(int n, const ChainParams& p,
                                  const QuadratureSpec& spec) {
  return NessAssembler(p, spec).assemble(n);
}

ReducedCorrelation assemble_theta_structured(int n, const ChainParams& p,
                                             HankelMode mode,
                                             const QuadratureSpec& spec) {
  return NessAssembler(p, spec).assemble_structured(n, mode);
}

SkewMatrix assemble_full_skew(int n, const ChainParams& p,
                              const QuadratureSpec& spec) {
  return NessAssembler(p, spec).full_skew(n);
}

LogScaled efp(int n, const ChainParams& p, const QuadratureSpec& spec) {
  return NessAssembler(p, spec).efp(n);
}

}  // namespace xyefp
