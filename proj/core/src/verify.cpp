#include "xyefp/verify.hpp"

#include <cmath>
#include <random>

#include "xyefp/correlation.hpp"
#include "xyefp/format.hpp"
#include "xyefp/oracle.hpp"
#include "xyefp/pfaffian.hpp"
#include "xyefp/scattering.hpp"
#include "xyefp/spectral.hpp"

namespace xyefp {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // record a measured deviation against its tolerance
  void check(const std::string& what, double error, double tol) {
    result_.max_error = std::max(result_.max_error, error);
    if (!(error <= tol) && result_.passed) {
      result_.passed = false;
      result_.detail = what + " (error " + format_double(error) +
                       ", tolerance " + format_double(tol) + ")";
    }
  }
  void check_true(const std::string& what, bool ok) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  void fail(const std::string& what) { check_true(what, false); }

  SuiteResult finish() { return result_; }

 private:
  SuiteResult result_;
};

std::vector<double> momentum_grid(int count) {
  std::vector<double> ks;
  for (int i = 1; i < count; ++i) {
    const double k = -pi + 2.0 * pi * i / count;
    if (std::abs(k) > 1e-9 && std::abs(std::abs(k) - pi) > 1e-9)
      ks.push_back(k);
  }
  return ks;
}

SuiteResult verify_model(const VerifyOptions& o) {
  Suite suite("model");
  try {
    const ChainParams& p = o.params;
    double dual = 0.0, even = 0.0, bounds = 0.0;
    for (double k : momentum_grid(257)) {
      dual = std::max(dual, std::abs(ness_density(p, k, Sign::plus) +
                                     ness_density(p, -k, Sign::minus) - 1.0));
      even = std::max(even,
                      std::abs(fermi_side(p, k, Side::left, Sign::minus) -
                               fermi_side(p, -k, Side::left, Sign::minus)));
      even = std::max(even, std::abs(transmission(p, k) - transmission(p, -k)));
      const double a = toeplitz_symbol_value(p, k);
      const double lo =
          std::min(fermi_side(p, k, Side::left, Sign::plus),
                   fermi_side(p, k, Side::right, Sign::plus));
      const double hi =
          std::max(fermi_side(p, k, Side::left, Sign::plus),
                   fermi_side(p, k, Side::right, Sign::plus));
      bounds = std::max(bounds, std::max(lo - a, a - hi));
    }
    suite.check("particle-hole duality", dual, 1e-14);
    suite.check("evenness", even, 1e-14);
    suite.check("mixture bounds", bounds, 1e-14);

    const double h = 1e-8;
    const double c0 = std::abs(toeplitz_symbol_value(p, h) -
                               toeplitz_symbol_value(p, -h));
    const double cpi = std::abs(toeplitz_symbol_value(p, pi - h) -
                                toeplitz_symbol_value(p, -pi + h));
    suite.check("continuity of a at 0", c0, 1e-12);
    suite.check("continuity of a at pi", cpi, 1e-12);
    suite.check("a(+pi) = a(-pi)",
                std::abs(toeplitz_symbol_value(p, pi) -
                         toeplitz_symbol_value(p, -pi)),
                0.0);

    // sign(0) convention insensitivity: Fourier coefficients of the density
    // agree for all three conventions (panel edges sit on the breakpoints).
    for (int conv : {-1, +1}) {
      ScalarSymbol with_conv{
          [p, conv](double k) {
            return Complex(ness_density(p, k, Sign::minus, conv));
          },
          {0.0}};
      ScalarSymbol base = ness_density_symbol(p, Sign::minus);
      double dev = 0.0;
      for (long m : {0L, 1L, 5L})
        dev = std::max(dev,
                       std::abs(fourier_coefficient(with_conv, m, o.quad) -
                                fourier_coefficient(base, m, o.quad)));
      suite.check("sign(0) convention insensitivity", dev, 1e-12);
    }
  } catch (const Error& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

SuiteResult verify_spectral(const VerifyOptions& o) {
  Suite suite("spectral");
  try {
    for (double kappa : {0.1, 0.5, 1.0, 2.0}) {
      const BoundState bs = bound_state(kappa);
      suite.check("exp(-lambda_B)(kappa + e_B) = 1",
                  std::abs(std::exp(-bs.decay_rate) *
                               (kappa + bs.eigenvalue) -
                           1.0),
                  1e-15);
      double residual = 0.0;
      for (long x = -20; x <= 20; ++x) {
        const double hop =
            0.5 * (eigenfunction(bs, x - 1) + eigenfunction(bs, x + 1));
        const double imp = x == 0 ? kappa * eigenfunction(bs, 0) : 0.0;
        residual = std::max(residual,
                            std::abs(hop + imp - bs.eigenvalue *
                                                     eigenfunction(bs, x)));
      }
      suite.check("eigenvalue equation residual", residual, 1e-13);
    }
    for (double kappa : {0.1, 0.5, 1.0}) {
      const BoundState bs = bound_state(kappa);
      double dev = 0.0;
      for (int x = 0; x <= 10; ++x)
        dev = std::max(dev, std::abs(exp_fourier_identity(bs, x, o.quad) -
                                     std::exp(-bs.decay_rate * x)));
      suite.check("residue identity", dev, 1e-10);
    }
    // truncation convergence and route agreement of the overlap
    ChainParams p = o.params;
    p.kappa = 0.5;
    const BoundState bs = bound_state(p.kappa);
    const int w = default_overlap_window(p, 1e-12);
    const double v1 = initial_overlap(p, Sign::minus, w, 1e-10);
    const double v2 = initial_overlap(p, Sign::minus, w + 10, 1e-10);
    suite.check("overlap window convergence", std::abs(v1 - v2),
                10.0 * std::exp(-2.0 * bs.decay_rate *
                                (w - p.sample_radius)));
    const double v3 = initial_overlap_halfline(p, Sign::minus, o.quad);
    suite.check("overlap route agreement", std::abs(v2 - v3), 1e-10);
    const double vp = initial_overlap_halfline(p, Sign::plus, o.quad);
    suite.check("overlap partition of unity", std::abs(v3 + vp - 1.0), 1e-11);
  } catch (const Error& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

SuiteResult verify_scattering(const VerifyOptions& o) {
  Suite suite("scattering");
  try {
    for (double kappa : {o.params.kappa, 1.0}) {
      const BoundState bs = bound_state(kappa);
      double gram = 0.0;
      for (long x = -5; x <= 5; ++x)
        for (long y = x; y <= 5; ++y) {
          auto f = [&bs, x, y](double k) {
            return std::conj(wave_action(k, x, Sign::minus, bs)) *
                   wave_action(k, y, Sign::minus, bs);
          };
          const Complex g = integrate_circle_or_throw(
              f, {0.0},
              static_cast<double>(std::labs(x) + std::labs(y)), o.quad);
          const double expected =
              (x == y ? 1.0 : 0.0) -
              eigenfunction(bs, x) * eigenfunction(bs, y);
          gram = std::max(gram, std::abs(g - expected));
        }
      suite.check("wave-operator completeness", gram, 1e-8);
    }
    const BoundState bs = bound_state(o.params.kappa);
    double conj_dev = 0.0;
    for (double k : momentum_grid(101))
      for (long x : {-3L, 0L, 2L})
        conj_dev = std::max(
            conj_dev, std::abs(wave_action(k, x, Sign::plus, bs) -
                               std::conj(wave_action(-k, x, Sign::minus, bs))));
    suite.check("branch conjugation", conj_dev, 1e-14);
    double mod_dev = 0.0;
    for (double e : {-0.9, -0.4, 0.0, 0.3, 0.75})
      for (long x : {0L, 1L, 4L})
        for (Sign side : {Sign::minus, Sign::plus})
          mod_dev = std::max(
              mod_dev, std::abs(std::abs(resolvent_boundary(e, x, side)) *
                                    std::sqrt(1.0 - e * e) -
                                1.0));
    suite.check("resolvent boundary modulus", mod_dev, 1e-13);
  } catch (const Error& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

SuiteResult verify_pfaffian(const VerifyOptions&) {
  Suite suite("pfaffian");
  try {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    auto random_skew = [&](int order) {
      SkewMatrix a(order);
      for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
          a.upper(i, j) = Complex(coef(rng), coef(rng));
      return a;
    };
    auto random_dense = [&](int n) {
      Eigen::MatrixXcd x(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Complex(coef(rng), coef(rng));
      return x;
    };
    auto rel = [](const LogScaled& a, const LogScaled& b) {
      if (a.is_zero() && b.is_zero()) return 0.0;
      return std::abs(a.value() - b.value()) /
             std::max(1e-300, std::abs(b.value()));
    };

    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const int order = 2 * (1 + trial % 6);  // 2..12
      const SkewMatrix a = random_skew(order);
      const LogScaled pf = pfaffian(a);
      const LogScaled sq = pf * pf;
      worst = std::max(worst, rel(sq, logdet(a.dense())));
    }
    suite.check("pf^2 = det (orders 2-12)", worst, 1e-10);

    worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const int order = 14 + 2 * (trial % 6);  // elimination path
      const SkewMatrix a = random_skew(order);
      const LogScaled pf = pfaffian_elimination(a);
      worst = std::max(worst, rel(pf * pf, logdet(a.dense())));
    }
    suite.check("pf^2 = det (elimination, orders 14-24)", worst, 1e-10);

    worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const IdentityPair id = pfaffian_block_identity(random_dense(3 + trial % 4));
      worst = std::max(worst, rel(id.lhs, id.rhs));
    }
    suite.check("pf([[0,X],[-X^t,0]]) identity", worst, 1e-10);

    worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int order = 2 * (1 + trial % 4);
      const IdentityPair id = pfaffian_congruence_identity(
          random_dense(order), random_skew(order));
      worst = std::max(worst, rel(id.lhs, id.rhs));
    }
    suite.check("pf(X Y X^t) = det(X) pf(Y)", worst, 1e-10);

    // permutation congruence: pf(P A P^t) = det(P) pf(A)
    worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const int order = 2 * (2 + trial % 4);
      std::vector<int> perm(order);
      for (int i = 0; i < order; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      Eigen::MatrixXcd pm = Eigen::MatrixXcd::Zero(order, order);
      for (int i = 0; i < order; ++i) pm(i, perm[i]) = 1.0;
      const IdentityPair id =
          pfaffian_congruence_identity(pm, random_skew(order));
      worst = std::max(worst, rel(id.lhs, id.rhs));
    }
    suite.check("permutation similarity", worst, 1e-10);
  } catch (const Error& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

SuiteResult verify_correlation(const VerifyOptions& o) {
  Suite suite("correlation");
  try {
    // path equivalence across string starts
    double worst = 0.0;
    for (int x0 : {0, 1, 3}) {
      ChainParams p = o.params;
      p.string_start = x0;
      NessAssembler assembler(p, o.quad);
      const Eigen::MatrixXcd direct = assembler.assemble(12).theta;
      const Eigen::MatrixXcd structured =
          assembler.assemble_structured(12, o.hankel_mode).theta;
      worst = std::max(worst, (direct - structured).cwiseAbs().maxCoeff());
    }
    suite.check("path equivalence (x0 >= 0)", worst, 1e-8);

    {
      ChainParams p = o.params;
      p.string_start = -2;
      NessAssembler assembler(p, o.quad);
      const Eigen::MatrixXcd direct = assembler.assemble(10).theta;
      const Eigen::MatrixXcd structured =
          assembler.assemble_structured(10, o.hankel_mode).theta;
      suite.check("path equivalence (shifted block, x0 = -2)",
                  (direct - structured).cwiseAbs().maxCoeff(), 1e-8);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
          assembler.structured_remainder(10, o.hankel_mode));
      double tail = 0.0;
      for (int s = 4; s < svd.singularValues().size(); ++s)
        tail = std::max(tail, svd.singularValues()(s));
      suite.check("remainder rank <= 2 n0", tail, 1e-10);
    }

    NessAssembler assembler(o.params, o.quad);
    double pf_dev = 0.0;
    for (int n : {1, 2, 4, 6}) {
      const LogScaled pf = pfaffian(assembler.full_skew(n));
      const LogScaled det = logdet(assembler.assemble(n).theta);
      pf_dev = std::max(pf_dev, std::abs(pf.value() - det.value()) /
                                    std::abs(det.value()));
    }
    suite.check("pfaffian/determinant consistency", pf_dev, 1e-10);

    // hermitian companion: the b-block alone is a hermitian matrix
    const SkewMatrix omega = assembler.full_skew(6);
    double herm = 0.0;
    for (int i = 1; i <= 6; ++i)
      for (int j = i; j <= 6; ++j)
        herm = std::max(herm,
                        std::abs(omega(2 * i - 2, 2 * j - 1) -
                                 std::conj(omega(2 * j - 2, 2 * i - 1))));
    suite.check("hermitian companion", herm, 1e-10);

    double prev = 2.0;
    bool monotone = true;
    for (int n = 1; n <= 8; ++n) {
      const double p_n = std::exp(assembler.efp(n).log_magnitude);
      if (!(p_n >= 0.0 && p_n <= 1.0 && p_n < prev)) monotone = false;
      prev = p_n;
    }
    suite.check_true("0 <= P(n+1) < P(n) <= 1", monotone);
  } catch (const Error& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

SuiteResult verify_szego(const VerifyOptions& o) {
  Suite suite("szego");
  try {
    // rate identity on a parameter grid
    double worst = 0.0;
    for (double kappa : {0.1, 0.5, 2.0}) {
      ChainParams p = o.params;
      p.kappa = kappa;
      const DecayRates rates = decay_rates(p, o.quad);
      const GeometricMean g = geometric_mean(toeplitz_symbol(p), o.quad);
      worst = std::max(worst,
                       std::abs(rates.gamma_total - g.rate));
      if (p.beta_bias() > 0.0)
        suite.check_true("rate ordering",
                         0.0 < rates.gamma_left &&
                             rates.gamma_left < rates.gamma_bound &&
                             rates.gamma_bound < rates.gamma_right);
    }
    suite.check("rate identity Gamma_R + Gamma_B = -log G(a)", worst, 1e-10);

    {
      ChainParams p = o.params;
      p.beta_right = p.beta_left;
      const DecayRates rates = decay_rates(p, o.quad);
      suite.check("equilibrium rate collapse",
                  std::max(std::abs(rates.gamma_left - rates.gamma_bound),
                           std::abs(rates.gamma_right - rates.gamma_bound)),
                  1e-12);
    }

    double prev = -1.0;
    bool monotone = true;
    for (double kappa : {0.05, 0.2, 1.0, 5.0}) {
      ChainParams p = o.params;
      p.kappa = kappa;
      const double gb = decay_rates(p, o.quad).gamma_bound;
      if (gb < prev - 1e-12) monotone = false;
      prev = gb;
    }
    suite.check_true("Gamma_B nondecreasing in kappa", monotone);

    {
      ChainParams p = o.params;
      p.kappa = 1e-4;
      const DecayRates small = decay_rates(p, o.quad);
      p.kappa = 1e4;
      const DecayRates large = decay_rates(p, o.quad);
      suite.check("kappa -> 0 limit",
                  std::abs(small.gamma_bound - small.gamma_left), 1e-3);
      suite.check("kappa -> infinity limit",
                  std::abs(large.gamma_bound - large.gamma_right), 1e-3);
    }

    // Hartman-Wintner range of the symbol
    {
      const ChainParams& p = o.params;
      double lo = 2.0, hi = -2.0;
      for (int i = 0; i <= 8192; ++i) {
        const double a =
            toeplitz_symbol_value(p, -pi + 2.0 * pi * i / 8192.0);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      suite.check(
          "symbol range lower end",
          std::abs(lo - fermi_side(p, 0.0, Side::right, Sign::minus)), 1e-10);
      suite.check(
          "symbol range upper end",
          std::abs(hi - fermi_side(p, 0.0, Side::right, Sign::plus)), 1e-10);
    }

    // smoothness of the Hankel symbol: coefficient decay and a trace-norm
    // proxy for the singular-value summability of its sections
    {
      const ScalarSymbol b = hankel_symbol(o.params, o.hankel_mode, o.quad);
      double cap = 0.0;
      for (long m = 1; m <= 16; ++m)
        cap = std::max(cap, std::abs(fourier_coefficient(b, m, o.quad)) *
                                std::pow(static_cast<double>(m), 4.0));
      double excess = 0.0;
      for (long m = 17; m <= 64; ++m) {
        const double bound =
            2.0 * cap / std::pow(static_cast<double>(m), 4.0);
        excess = std::max(excess,
                          std::abs(fourier_coefficient(b, m, o.quad)) - bound);
      }
      suite.check("hankel coefficient decay", excess, 0.0);

      auto trace_norm = [&](int n) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hankel_section(b, n, o.quad));
        return svd.singularValues().sum();
      };
      suite.check("hankel trace-norm convergence",
                  std::abs(trace_norm(64) - trace_norm(32)), 1e-8);
    }

    // jump diagnostic against the closed form (both jumps carry + sign)
    {
      const JumpDiagnostic jd = symbol_jump_diagnostic(o.params);
      suite.check("a'' jump at 0",
                  std::abs(std::abs(jd.measured_at_zero) - jd.predicted) /
                      jd.predicted,
                  1e-6);
      suite.check("a'' jump at pi",
                  std::abs(std::abs(jd.measured_at_pi) - jd.predicted) /
                      jd.predicted,
                  1e-6);
      suite.check("equal jumps at the two breakpoints",
                  std::abs(jd.measured_at_pi - jd.measured_at_zero) /
                      jd.predicted,
                  1e-6);
    }
  } catch (const Error& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

SuiteResult verify_oracle(const VerifyOptions& o) {
  Suite suite("oracle");
  try {
    FiniteVolumeSpec spec;
    spec.window_radius = o.oracle_window;
    spec.horizon = o.oracle_horizon;
    spec.samples = o.oracle_samples;
    const ChainParams& p = o.params;

    // partition of unity of the initial densities
    const Eigen::MatrixXd sm = initial_density(spec, p, Sign::minus);
    const Eigen::MatrixXd sp = initial_density(spec, p, Sign::plus);
    const Eigen::MatrixXd unit =
        Eigen::MatrixXd::Identity(sm.rows(), sm.cols());
    suite.check("s_{0,+} + s_{0,-} = 1",
                (sm + sp - unit).cwiseAbs().maxCoeff(), 1e-12);

    FiniteVolumeSimulator sim(spec, p);
    double imag_dev = 0.0;
    for (double t : {0.0, 7.5, 19.0, 28.0})
      imag_dev = std::max(
          imag_dev, std::abs(sim.theta_at_time(t, 3).determinant().imag()));
    suite.check("det Theta(t) real", imag_dev, 1e-10);

    // Cesaro convergence: quadrupling the horizon contracts the error
    const int n = 2;
    const double reference =
        std::exp(NessAssembler(p, o.quad).efp(n).log_magnitude);
    const double t0 = o.oracle_horizon;
    const double err1 = std::abs(
        sim.efp_time_average(n, t0, o.oracle_samples, 0.5) - reference);
    const double err4 = std::abs(
        sim.efp_time_average(n, 4.0 * t0, 4 * o.oracle_samples, 0.5) -
        reference);
    suite.check("Cesaro contraction", err4, 0.5 * err1 + 1e-6);
  } catch (const Error& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

SuiteResult verify_cli(const VerifyOptions&) {
  Suite suite("cli");
  try {
    // 17-digit formatting round-trips bit-exactly and is deterministic
    const double values[] = {0.0,        1.0 / 3.0,  -2.5e-300, 6.02214076e23,
                             -0.1192029220221176, 3.0e-8, 123456789.123456789};
    bool exact = true;
    for (double v : values) {
      const std::string s1 = format_double(v);
      const double back = parse_double(s1);
      if (back != v || format_double(back) != s1) exact = false;
    }
    suite.check_true("numeric round trip at 17 significant digits", exact);
  } catch (const std::exception& e) {
    suite.fail(std::string("exception: ") + e.what());
  }
  return suite.finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  options.params.validate();
  std::vector<SuiteResult> results;
  results.push_back(verify_model(options));
  results.push_back(verify_spectral(options));
  results.push_back(verify_scattering(options));
  results.push_back(verify_pfaffian(options));
  results.push_back(verify_correlation(options));
  results.push_back(verify_szego(options));
  results.push_back(verify_oracle(options));
  results.push_back(verify_cli(options));
  return results;
}

}  // namespace xyefp
