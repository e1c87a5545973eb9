// Command-line front end: emptiness-probability tables, decay rates,
// symbol samples and the library's verification suites, as CSV or JSON.
//
// Exit codes: 0 ok, 2 configuration error, 3 numerical failure,
// 4 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xyefp/correlation.hpp"
#include "xyefp/format.hpp"
#include "xyefp/oracle.hpp"
#include "xyefp/szego.hpp"
#include "xyefp/verify.hpp"

namespace {

using namespace xyefp;

struct RunConfig {
  ChainParams params;
  int n_max = 40;
  double quad_tol = 1e-12;
  std::string hankel_mode = "B";
  int oracle_window = 140;
  double oracle_horizon = 30.0;
  int oracle_samples = 64;
  std::string format = "csv";
  std::string out;

  QuadratureSpec quad() const {
    QuadratureSpec spec;
    spec.tol = quad_tol;
    return spec;
  }
  HankelMode mode() const {
    if (hankel_mode == "A") return HankelMode::A;
    if (hankel_mode == "B") return HankelMode::B;
    throw ConfigError("hankel-mode must be A or B");
  }
  void validate() const {
    params.validate();
    if (n_max < 1) throw ConfigError("n-max must be >= 1");
    if (!(quad_tol > 0.0)) throw ConfigError("quad-tol must be positive");
    if (format != "csv" && format != "json")
      throw ConfigError("format must be csv or json");
    mode();
  }
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--beta-left", cfg.params.beta_left,
                  "inverse temperature of the left reservoir");
  cmd->add_option("--beta-right", cfg.params.beta_right,
                  "inverse temperature of the right reservoir");
  cmd->add_option("--kappa", cfg.params.kappa, "impurity coupling");
  cmd->add_option("--x0", cfg.params.string_start,
                  "first site of the observed string");
  cmd->add_option("--sample-radius", cfg.params.sample_radius,
                  "half-width N of the decoupled sample block");
  cmd->add_flag("--allow-infinite-temperature",
                cfg.params.allow_infinite_temperature,
                "admit beta = 0 (test configurations)");
  cmd->add_option("--n-max", cfg.n_max, "largest string length");
  cmd->add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance");
  cmd->add_option("--hankel-mode", cfg.hankel_mode,
                  "Hankel symbol variant, A or B (default B)");
  cmd->add_option("--oracle-window", cfg.oracle_window,
                  "finite-volume lattice radius M");
  cmd->add_option("--oracle-horizon", cfg.oracle_horizon,
                  "finite-volume averaging horizon T");
  cmd->add_option("--oracle-samples", cfg.oracle_samples,
                  "finite-volume time samples");
  cmd->add_option("--format", cfg.format, "output format: csv or json");
  cmd->add_option("--out", cfg.out, "output path (default stdout)");
  cmd->set_config("--config", "", "flat key=value configuration file");
  cmd->allow_config_extras(false);
}

// ---- minimal emitters with fully controlled number formatting ----

struct Cell {
  enum class Kind { number, text, boolean } kind;
  double num = 0.0;
  std::string text;
  bool flag = false;

  static Cell n(double v) { return {Kind::number, v, {}, false}; }
  static Cell s(std::string v) { return {Kind::text, 0.0, std::move(v), false}; }
  static Cell b(bool v) { return {Kind::boolean, 0.0, {}, v}; }
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string render_cell_csv(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::number: return format_double(c.num);
    case Cell::Kind::boolean: return c.flag ? "true" : "false";
    case Cell::Kind::text: {
      if (c.text.find_first_of(",\"\n") == std::string::npos) return c.text;
      std::string quoted = "\"";
      for (char ch : c.text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      return quoted + "\"";
    }
  }
  return {};
}

std::string render_cell_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::number: return format_double(c.num);
    case Cell::Kind::boolean: return c.flag ? "true" : "false";
    case Cell::Kind::text: return "\"" + json_escape(c.text) + "\"";
  }
  return {};
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (std::size_t c = 0; c < t.header.size(); ++c)
      os << (c ? "," : "") << t.header[c];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        os << (c ? "," : "") << render_cell_csv(row[c]);
      os << "\n";
    }
  } else {
    os << "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << (r ? ",\n " : "\n ") << "{";
      for (std::size_t c = 0; c < t.rows[r].size(); ++c)
        os << (c ? "," : "") << "\"" << t.header[c]
           << "\":" << render_cell_json(t.rows[r][c]);
      os << "}";
    }
    os << "\n]\n";
  }
  return os.str();
}

void emit(const Table& t, const RunConfig& cfg) {
  const std::string body = render(t, cfg.format);
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file " + cfg.out);
  file << body;
}

// ---- subcommands ----

int cmd_compute(const RunConfig& cfg) {
  cfg.validate();
  std::vector<double> log_p;
  double log_g = 0.0;
  if (cfg.params.string_start >= 0 && cfg.n_max <= 400) {
    const AsymptoticProfile prof =
        asymptotic_profile(cfg.params, cfg.n_max, cfg.mode(), cfg.quad());
    log_g = prof.log_geometric_mean;
    for (int n = 1; n <= cfg.n_max; ++n)
      log_p.push_back(prof.log_ratio[n - 1] + n * log_g);
  } else {
    NessAssembler assembler(cfg.params, cfg.quad());
    for (int n = 1; n <= cfg.n_max; ++n)
      log_p.push_back(assembler.efp(n).log_magnitude);
    log_g = std::log(geometric_mean(toeplitz_symbol(cfg.params), cfg.quad()).value);
  }

  Table t;
  t.header = {"n", "p", "log10_p", "ratio_to_g_power"};
  for (int n = 1; n <= cfg.n_max; ++n) {
    const double lp = log_p[n - 1];
    t.rows.push_back({Cell::n(n), Cell::n(std::exp(lp)),
                      Cell::n(lp / std::log(10.0)),
                      Cell::n(std::exp(lp - n * log_g))});
  }
  emit(t, cfg);
  return 0;
}

int cmd_rates(const RunConfig& cfg) {
  cfg.validate();
  const DecayRates r = decay_rates(cfg.params, cfg.quad());
  const bool ordered = cfg.params.beta_bias() > 0.0
                           ? (0.0 < r.gamma_left &&
                              r.gamma_left < r.gamma_bound &&
                              r.gamma_bound < r.gamma_right)
                           : (std::abs(r.gamma_left - r.gamma_right) < 1e-12 &&
                              std::abs(r.gamma_bound - r.gamma_right) < 1e-12);
  Table t;
  t.header = {"gamma_left", "gamma_right", "gamma_bound", "gamma_total",
              "ordering_ok"};
  t.rows.push_back({Cell::n(r.gamma_left), Cell::n(r.gamma_right),
                    Cell::n(r.gamma_bound), Cell::n(r.gamma_total),
                    Cell::b(ordered)});
  emit(t, cfg);
  return 0;
}

int cmd_symbols(const RunConfig& cfg, int count) {
  cfg.validate();
  const ScalarSymbol b = hankel_symbol(cfg.params, cfg.mode(), cfg.quad());
  Table t;
  t.header = {"k", "a", "a_prime", "b_real", "b_imag", "density_minus"};
  for (int i = 0; i <= count; ++i) {
    const double k = -pi + 2.0 * pi * i / count;
    const Complex bv = b.evaluate(k);
    t.rows.push_back({Cell::n(k), Cell::n(toeplitz_symbol_value(cfg.params, k)),
                      Cell::n(toeplitz_symbol_derivative(cfg.params, k)),
                      Cell::n(bv.real()), Cell::n(bv.imag()),
                      Cell::n(ness_density(cfg.params, k, Sign::minus))});
  }
  emit(t, cfg);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  VerifyOptions options;
  options.params = cfg.params;
  options.hankel_mode = cfg.mode();
  options.quad = cfg.quad();
  options.oracle_window = cfg.oracle_window;
  options.oracle_horizon = cfg.oracle_horizon;
  options.oracle_samples = cfg.oracle_samples;
  const std::vector<SuiteResult> results = run_verification(options);

  Table t;
  t.header = {"suite", "passed", "max_error", "detail"};
  bool all_passed = true;
  for (const SuiteResult& r : results) {
    all_passed = all_passed && r.passed;
    t.rows.push_back({Cell::s(r.name), Cell::b(r.passed),
                      Cell::n(r.max_error), Cell::s(r.detail)});
  }
  emit(t, cfg);
  return all_passed ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "steady-state emptiness probabilities of an impurity-coupled "
      "hopping chain between two thermal reservoirs"};
  app.require_subcommand(1);

  RunConfig cfg_compute, cfg_rates, cfg_symbols, cfg_verify;
  int symbol_count = 512;

  CLI::App* compute = app.add_subcommand(
      "compute", "table of P(n), log10 P(n) and P(n)/G^n for n = 1..n-max");
  add_common_options(compute, cfg_compute);
  CLI::App* rates = app.add_subcommand(
      "rates", "exponential decay rates and their ordering");
  add_common_options(rates, cfg_rates);
  CLI::App* symbols = app.add_subcommand(
      "symbols", "samples of the Toeplitz/Hankel symbols and the density");
  add_common_options(symbols, cfg_symbols);
  symbols->add_option("--count", symbol_count, "number of sample intervals");
  CLI::App* verify = app.add_subcommand(
      "verify", "run the library invariant suites and report pass/fail");
  add_common_options(verify, cfg_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg_compute);
    if (rates->parsed()) return cmd_rates(cfg_rates);
    if (symbols->parsed()) return cmd_symbols(cfg_symbols, symbol_count);
    if (verify->parsed()) return cmd_verify(cfg_verify);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
