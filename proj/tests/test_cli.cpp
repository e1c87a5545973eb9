#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "xyefp/format.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(XYEFP_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe))
    output.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& body) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(body);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("compute: infinite-temperature table") {
  const RunResult r = run_cli(
      "compute --beta-left 0 --beta-right 0 --allow-infinite-temperature "
      "--kappa 0.3 --x0 2 --n-max 10");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == std::vector<std::string>{"n", "p", "log10_p",
                                            "ratio_to_g_power"});
  for (int n = 1; n <= 10; ++n) {
    const double log10_p = xyefp::parse_double(rows[n][2]);
    CHECK(std::abs(log10_p + n * std::log10(2.0)) < 1e-10);
    const double ratio = xyefp::parse_double(rows[n][3]);
    CHECK(std::abs(ratio - 1.0) < 1e-10);
  }
}

TEST_CASE("compute: deterministic and bit-exact round trip") {
  const std::string args =
      "compute --beta-left 0.5 --beta-right 2 --kappa 0.2 --x0 1 --n-max 6";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);  // byte-identical across runs

  for (const auto& row : parse_csv(a.output)) {
    if (row[0] == "n") continue;
    for (const std::string& cell : row) {
      const double v = xyefp::parse_double(cell);
      CHECK(xyefp::format_double(v) == cell);  // 17-digit round trip
    }
  }
}

TEST_CASE("compute: json output") {
  const RunResult r = run_cli(
      "compute --beta-left 0.5 --beta-right 2 --kappa 0.2 --x0 1 --n-max 3 "
      "--format json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"log10_p\":") != std::string::npos);
  CHECK(r.output.front() == '[');
}

TEST_CASE("rates") {
  SUBCASE("two-temperature ordering verdict") {
    const RunResult r = run_cli(
        "rates --beta-left 0.5 --beta-right 2 --kappa 0.2 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][4] == "ordering_ok");
    CHECK(rows[1][4] == "true");
    const double gl = xyefp::parse_double(rows[1][0]);
    const double gr = xyefp::parse_double(rows[1][1]);
    const double gb = xyefp::parse_double(rows[1][2]);
    const double gt = xyefp::parse_double(rows[1][3]);
    CHECK(gl < gb);
    CHECK(gb < gr);
    CHECK(std::abs(gt - gr - gb) < 1e-14);
  }

  SUBCASE("infinite temperature total is log 2") {
    const RunResult r = run_cli(
        "rates --beta-left 0 --beta-right 0 --allow-infinite-temperature "
        "--kappa 1");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    CHECK(std::abs(xyefp::parse_double(rows[1][3]) - std::log(2.0)) < 1e-10);
  }
}

TEST_CASE("symbols table") {
  const RunResult r = run_cli(
      "symbols --beta-left 0.5 --beta-right 2 --kappa 0.2 --count 16");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 18);
  CHECK(rows[0][0] == "k");
}

TEST_CASE("configuration errors exit with code 2") {
  CHECK(run_cli("rates --kappa 0").exit_code == 2);
  CHECK(run_cli("rates --kappa -1").exit_code == 2);
  CHECK(run_cli("rates --beta-left 3 --beta-right 1").exit_code == 2);
  CHECK(run_cli("compute --format yaml").exit_code == 2);
  CHECK(run_cli("compute --no-such-flag 1").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // subcommand required
}

TEST_CASE("config file with flag override") {
  const std::string path = "/tmp/xyefp_test_config.txt";
  {
    std::ofstream f(path);
    f << "beta-left=0.5\nbeta-right=2\nkappa=0.2\nn-max=4\n";
  }
  const RunResult base = run_cli("compute --config " + path);
  REQUIRE(base.exit_code == 0);
  CHECK(parse_csv(base.output).size() == 5);  // n-max=4 from the file

  const RunResult overridden =
      run_cli("compute --config " + path + " --n-max 2");
  REQUIRE(overridden.exit_code == 0);
  CHECK(parse_csv(overridden.output).size() == 3);  // flag wins

  {
    std::ofstream f(path);
    f << "beta-left=0.5\nbeta-right=2\nkappa=0.2\nunknown-key=1\n";
  }
  CHECK(run_cli("compute --config " + path).exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("output file") {
  const std::string path = "/tmp/xyefp_test_out.csv";
  const RunResult r = run_cli(
      "rates --beta-left 0.5 --beta-right 2 --kappa 0.2 --out " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header ==
        "gamma_left,gamma_right,gamma_bound,gamma_total,ordering_ok");
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
  SUBCASE("default configuration passes") {
    const RunResult r = run_cli(
        "verify --beta-left 0.5 --beta-right 2 --kappa 0.2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"suite\":\"correlation\"") != std::string::npos);
    CHECK(r.output.find("\"passed\":false") == std::string::npos);
  }

  SUBCASE("corrupted Hankel normalization fails with code 4") {
    const RunResult r = run_cli(
        "verify --beta-left 0.5 --beta-right 2 --kappa 0.2 --hankel-mode A");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("path equivalence") != std::string::npos);
  }
}
