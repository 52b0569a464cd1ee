// Integration tests for the cub5 command-line tool: spawns the real binary
// and checks outputs and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "measure.hpp"
#include "moments.hpp"
#include "special.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string cmd = std::string(CUB5_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    result.output.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

double value_after(const std::string& output, const std::string& label) {
  auto pos = output.find(label);
  REQUIRE(pos != std::string::npos);
  return std::stod(output.substr(pos + label.size()));
}

}  // namespace

TEST_CASE("generate prints counts, bound and gap") {
  auto res = run_cli("generate --region cube --n 4");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "points: 39"));
  CHECK(contains(res.output, "moller bound: 21"));
  CHECK(contains(res.output, "gap: 18"));
  CHECK(contains(res.output, "negative weights: true"));
}

TEST_CASE("shell generation warns about the origin") {
  auto res = run_cli("generate --region shell --n 5 --r 0.5");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "points in region: false"));
  CHECK(contains(res.output, "warning: origin outside region"));
}

TEST_CASE("usage and construction failures use distinct exit codes") {
  CHECK(run_cli("generate --region cube --n 3").exit_code == 1);      // bad dimension
  CHECK(run_cli("generate --region nowhere --n 5").exit_code == 1);   // bad flag value
  CHECK(run_cli("generate --region cube --n 5 --gamma 1e-9").exit_code == 2);
  CHECK(run_cli("verify --rule /nonexistent.json").exit_code == 1);
  CHECK(run_cli("bounds --n 6 --degree 4").exit_code == 1);  // even degree
  CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("bounds subcommand") {
  auto res = run_cli("bounds --n 7 --degree 5");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "moller bound: 57"));
  auto four = run_cli("bounds --n 4 --degree 5 --points 39 --verbose");
  CHECK(contains(four.output, "moller bound: 21"));
  CHECK(contains(four.output, "gap: 18"));
  CHECK(contains(four.output, "double-dimension form: 29"));
}

TEST_CASE("integrate reports rule value, exact value and error") {
  auto rule_file = temp_path("cub5_cli_g4.json");
  REQUIRE(run_cli("generate --region gaussian --n 4 --out " + rule_file.string()).exit_code == 0);

  auto res = run_cli("integrate --rule " + rule_file.string() + " --expr x1^2");
  CHECK(res.exit_code == 0);
  double rule_value = value_after(res.output, "rule value: ");
  double exact = value_after(res.output, "exact value: ");
  CHECK(exact == doctest::Approx(cub5::kPi * cub5::kPi / 2.0).epsilon(1e-13));
  CHECK(std::abs(rule_value - exact) <= 1e-12 * exact);
  CHECK(value_after(res.output, "relative error: ") < 1e-12);

  auto odd = run_cli("integrate --rule " + rule_file.string() + " --expr x1^5*x2");
  CHECK(value_after(odd.output, "exact value: ") == 0.0);
  CHECK(std::abs(value_after(odd.output, "rule value: ")) <= 1e-14 * cub5::kPi * cub5::kPi);

  auto sextic = run_cli("integrate --rule " + rule_file.string() + " --expr x1^6");
  CHECK(value_after(sextic.output, "relative error: ") > 1e-3);

  auto bad = run_cli("integrate --rule " + rule_file.string() + " --expr x1^");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "position"));

  std::filesystem::remove(rule_file);
}

TEST_CASE("moments subcommand prints closed-form values") {
  auto res = run_cli("moments --region ball --n 5 --monomial x1^2*x2^2");
  CHECK(res.exit_code == 0);
  cub5::moments::MomentOracle oracle(cub5::MeasureSpec::ball(5));
  double expected = oracle.evaluate(std::vector<int>{2, 2});
  CHECK(std::stod(res.output) == doctest::Approx(expected).epsilon(1e-13));

  auto table = run_cli("moments --region gaussian --n 4");
  CHECK(contains(table.output, "mass:"));
  CHECK(contains(table.output, "L(x1^2)"));
}

TEST_CASE("csv export and degree-6 verification report") {
  auto csv_file = temp_path("cub5_cli_rule.csv");
  REQUIRE(run_cli("generate --region ball --n 4 --format csv --out " + csv_file.string())
              .exit_code == 0);
  std::ifstream csv(csv_file);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "x1,x2,x3,x4,weight");
  csv.close();
  std::filesystem::remove(csv_file);

  auto rule_file = temp_path("cub5_cli_b4.json");
  auto report_file = temp_path("cub5_cli_b4_report.json");
  REQUIRE(run_cli("generate --region ball --n 4 --out " + rule_file.string()).exit_code == 0);
  auto res = run_cli("verify --rule " + rule_file.string() + " --degree 6 --out " +
                     report_file.string());
  CHECK(res.exit_code == 0);  // fails only beyond the declared degree
  std::ifstream in(report_file);
  auto report = nlohmann::json::parse(in);
  CHECK(report["pass"].get<bool>());
  CHECK(report["degrees"][6]["max_rel_error"].get<double>() > 1e-3);
  CHECK(report["degrees"][5]["max_rel_error"].get<double>() <= 1e-10);
  in.close();
  std::filesystem::remove(rule_file);
  std::filesystem::remove(report_file);
}

TEST_CASE("degree-3 generation") {
  auto res = run_cli("generate --region cube --n 5 --degree 3");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "degree: 3"));
  CHECK(contains(res.output, "points: 43"));
}
