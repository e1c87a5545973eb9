#ifndef XYEFP_VERIFY_HPP
#define XYEFP_VERIFY_HPP

#include <string>
#include <vector>

#include "xyefp/model.hpp"
#include "xyefp/szego.hpp"

namespace xyefp {

// Invariant suites, one per library module, runnable from the CLI.
// Each suite runs all of its checks (a failing check never aborts the rest),
// reports the worst measured deviation against the tightest tolerance it
// checks, and names the first failing check in `detail`.

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_error = 0.0;  // worst measured deviation across checks
  std::string detail;      // first failure, empty when passed
};

struct VerifyOptions {
  ChainParams params{};  // defaults are the two-temperature test point
  HankelMode hankel_mode = default_hankel_mode;
  QuadratureSpec quad{};
  // desk-scale finite-volume settings for the oracle suite
  int oracle_window = 140;
  double oracle_horizon = 30.0;
  int oracle_samples = 64;
};

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace xyefp

#endif
