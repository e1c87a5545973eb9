#include "xyefp/oracle.hpp"

#include <cmath>
#include <limits>

namespace xyefp {

void FiniteVolumeSpec::validate(const ChainParams& p, int n) const {
  p.validate();
  if (window_radius < 10 * std::max(1, p.sample_radius))
    throw ConfigError("window_radius must be >= 10 * max(1, sample_radius)");
  if (!(horizon > 0.0)) throw ConfigError("horizon must be positive");
  if (samples < 2) throw ConfigError("need at least two time samples");
  if (!(averaging_start >= 0.0 && averaging_start < 1.0))
    throw ConfigError("averaging_start must lie in [0, 1)");
  const double reach = window_radius - n - std::abs(p.string_start);
  if (!(horizon < reach))
    throw ConfigError(
        "light-cone bound violated: horizon " + std::to_string(horizon) +
        " must stay below window_radius - n - |x0| = " + std::to_string(reach));
}

namespace {
inline int site_index(const FiniteVolumeSpec& spec, long x) {
  return static_cast<int>(x) + spec.window_radius;
}
}  // namespace

Hamiltonians build_hamiltonians(const FiniteVolumeSpec& spec,
                                const ChainParams& p) {
  const int m = spec.window_radius;
  const int dim = 2 * m + 1;
  const int n = p.sample_radius;
  Hamiltonians h;
  h.full = Eigen::MatrixXd::Zero(dim, dim);
  for (int x = -m; x < m; ++x) {
    h.full(site_index(spec, x), site_index(spec, x + 1)) = 0.5;
    h.full(site_index(spec, x + 1), site_index(spec, x)) = 0.5;
  }
  h.decoupled = h.full;
  for (int bond : {-(n + 1), n}) {  // bonds -(N+1)<->-N and N<->N+1
    h.decoupled(site_index(spec, bond), site_index(spec, bond + 1)) = 0.0;
    h.decoupled(site_index(spec, bond + 1), site_index(spec, bond)) = 0.0;
  }
  h.magnetic = h.full;
  h.magnetic(site_index(spec, 0), site_index(spec, 0)) += p.kappa;
  return h;
}

Eigen::MatrixXd initial_density(const FiniteVolumeSpec& spec,
                                const ChainParams& p, Sign sign) {
  const int m = spec.window_radius;
  const int dim = 2 * m + 1;
  const int n = p.sample_radius;
  Eigen::MatrixXd k0 = Eigen::MatrixXd::Zero(dim, dim);
  for (int x = -m; x < m; ++x) {
    double beta = 0.0;
    if (x + 1 <= -(n + 1)) beta = p.beta_left;
    if (x >= n + 1) beta = p.beta_right;
    k0(site_index(spec, x), site_index(spec, x + 1)) = 0.5 * beta;
    k0(site_index(spec, x + 1), site_index(spec, x)) = 0.5 * beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k0);
  const int sv = sign_value(sign);
  Eigen::VectorXd fermi(dim);
  for (int a = 0; a < dim; ++a)
    fermi(a) = 1.0 / (1.0 + std::exp(sv * es.eigenvalues()(a)));
  return es.eigenvectors() * fermi.asDiagonal() *
         es.eigenvectors().transpose();
}

FiniteVolumeSimulator::FiniteVolumeSimulator(FiniteVolumeSpec spec,
                                             ChainParams params)
    : spec_(spec), params_(std::move(params)) {
  spec_.validate(params_, 1);
  const Hamiltonians h = build_hamiltonians(spec_, params_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.magnetic);
  hb_vectors_ = es.eigenvectors().cast<Complex>();
  hb_values_ = es.eigenvalues();
  s0_minus_ = initial_density(spec_, params_, Sign::minus).cast<Complex>();
  s0_plus_ = initial_density(spec_, params_, Sign::plus).cast<Complex>();
}

double FiniteVolumeSimulator::magnetic_eigenvalue_above_band() const {
  double best = std::numeric_limits<double>::infinity();
  for (int a = 0; a < hb_values_.size(); ++a)
    if (hb_values_(a) > 1.0 && hb_values_(a) < best) best = hb_values_(a);
  if (std::isinf(best))
    throw NumericalError("no eigenvalue above the band edge");
  return best;
}

Eigen::MatrixXcd FiniteVolumeSimulator::theta_at_time(double t, int n) const {
  const double reach =
      spec_.window_radius - n - std::abs(params_.string_start);
  if (!(std::abs(t) < reach))
    throw ConfigError("light-cone bound violated at t = " + std::to_string(t) +
                      " (bound " + std::to_string(reach) + ")");

  const int dim = static_cast<int>(hb_values_.size());
  Eigen::VectorXcd phase(dim);
  for (int a = 0; a < dim; ++a)
    phase(a) = std::exp(iu * (t * hb_values_(a)));

  // e^{ith_B} delta_x columns for the string sites; the e^{-ith_B}
  // columns are their conjugates since hB is real symmetric.
  Eigen::MatrixXcd fwd(dim, n);
  for (int i = 1; i <= n; ++i) {
    const int col = site_index(spec_, params_.string_start + i - 1);
    fwd.col(i - 1) =
        hb_vectors_ *
        (phase.array() * hb_vectors_.row(col).transpose().array()).matrix();
  }
  const Eigen::MatrixXcd bwd = fwd.conjugate();

  const Eigen::MatrixXcd b = fwd.adjoint() * (s0_minus_ * fwd);
  const Eigen::MatrixXcd c = bwd.adjoint() * (s0_plus_ * bwd);

  Eigen::MatrixXcd theta(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      theta(i, j) = i <= j ? b(i, j) : -c(j, i);
  return theta;
}

double FiniteVolumeSimulator::efp_time_average(int n, double horizon,
                                               int samples,
                                               double averaging_start) const {
  FiniteVolumeSpec local = spec_;
  local.horizon = horizon;
  local.samples = samples;
  local.averaging_start = averaging_start;
  local.validate(params_, n);

  const double t0 = averaging_start * horizon;
  Complex accum{0.0, 0.0};
  double weight_sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = t0 + (horizon - t0) * s / (samples - 1);
    const double w = (s == 0 || s == samples - 1) ? 0.5 : 1.0;
    accum += w * theta_at_time(t, n).determinant();
    weight_sum += w;
  }
  const Complex mean = accum / weight_sum;
  if (std::abs(mean.imag()) > 1e-8)
    throw NumericalError("Cesaro mean has a nonvanishing imaginary part: " +
                         std::to_string(mean.imag()));
  return mean.real();
}

double FiniteVolumeSimulator::efp_time_average(int n) const {
  return efp_time_average(n, spec_.horizon, spec_.samples,
                          spec_.averaging_start);
}

double efp_time_average(int n, const FiniteVolumeSpec& spec,
                        const ChainParams& p) {
  return FiniteVolumeSimulator(spec, p).efp_time_average(n);
}

}  // namespace xyefp
