// cub5: generate fifth-degree cubature rules, verify their polynomial
// exactness, integrate polynomial expressions, and report node-count lower
// bounds and closed-form moments. Talks to libcubature5 through its C API.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubature5.h"

namespace {

// Exit codes: 0 ok, 1 usage/parse/io, 2 construction failure, 3 verification failure.
int exit_code_for(cub5_status status) {
  switch (status) {
    case CUB5_OK: return 0;
    case CUB5_ERR_CONSTRUCTION: return 2;
    case CUB5_ERR_VERIFICATION: return 3;
    default: return 1;
  }
}

int report_error(cub5_status status) {
  std::fprintf(stderr, "error: %s\n", cub5_last_error());
  return exit_code_for(status);
}

struct MeasureDeleter {
  void operator()(cub5_measure* m) const { cub5_measure_free(m); }
};
struct RuleDeleter {
  void operator()(cub5_rule* r) const { cub5_rule_free(r); }
};
struct PolyDeleter {
  void operator()(cub5_poly* p) const { cub5_poly_free(p); }
};
using MeasurePtr = std::unique_ptr<cub5_measure, MeasureDeleter>;
using RulePtr = std::unique_ptr<cub5_rule, RuleDeleter>;
using PolyPtr = std::unique_ptr<cub5_poly, PolyDeleter>;

struct CommonConfig {
  std::string region = "cube";
  int n = 4;
  std::vector<double> alpha;
  double shell_r = 0.0;
};

cub5_status make_measure(const CommonConfig& cfg, MeasurePtr& out) {
  cub5_measure* m = nullptr;
  cub5_status st = CUB5_ERR_INVALID_ARGUMENT;
  if (cfg.region == "cube")
    st = cub5_measure_cube(cfg.n, cfg.alpha.data(), static_cast<int>(cfg.alpha.size()), &m);
  else if (cfg.region == "gaussian")
    st = cub5_measure_gaussian(cfg.n, &m);
  else if (cfg.region == "ball")
    st = cub5_measure_ball(cfg.n, &m);
  else if (cfg.region == "shell")
    st = cub5_measure_shell(cfg.n, cfg.shell_r, &m);
  else if (cfg.region == "exp-radial")
    st = cub5_measure_exp_radial(cfg.n, &m);
  out.reset(m);
  return st;
}

std::string owned_string(char* s) {
  std::string out = s ? s : "";
  cub5_free(s);
  return out;
}

int run_generate(const CommonConfig& cfg, int degree, std::optional<double> gamma,
                 const std::string& out_path, const std::string& format) {
  MeasurePtr measure;
  if (cub5_status st = make_measure(cfg, measure); st != CUB5_OK) return report_error(st);

  cub5_rule* raw = nullptr;
  cub5_status st;
  if (degree == 3) {
    if (gamma) {
      std::fprintf(stderr, "error: --gamma does not apply to the degree-3 construction\n");
      return 1;
    }
    st = cub5_rule_build_degree3(measure.get(), &raw);
  } else {
    double g = gamma.value_or(0.0);
    st = cub5_rule_build(measure.get(), gamma ? &g : nullptr, &raw);
  }
  if (st != CUB5_OK) return report_error(st);
  RulePtr rule(raw);

  long long points = 0;
  double mass = 0.0, g = 0.0;
  int in_region = 0, negative = 0, attains = 0;
  cub5_rule_point_count(rule.get(), &points);
  cub5_rule_mass(rule.get(), &mass);
  cub5_rule_gamma(rule.get(), &g);
  cub5_rule_flags(rule.get(), &in_region, &negative, &attains);
  long long moller = 0;
  cub5_moller_bound(cfg.n, degree, &moller);

  std::printf("region: %s\n", cfg.region.c_str());
  std::printf("dimension: %d\n", cfg.n);
  std::printf("degree: %d\n", degree);
  std::printf("points: %lld\n", points);
  std::printf("moller bound: %lld\n", moller);
  std::printf("gap: %lld\n", points - moller);
  std::printf("attains moller bound: %s\n", attains ? "true" : "false");
  std::printf("points in region: %s\n", in_region ? "true" : "false");
  std::printf("negative weights: %s\n", negative ? "true" : "false");
  std::printf("mass: %.17g\n", mass);
  std::printf("gamma: %.17g\n", g);
  if (!in_region) {
    if (cfg.region == "shell")
      std::printf("warning: origin outside region\n");
    else
      std::printf("warning: some points lie outside the integration region\n");
  }
  if (!out_path.empty()) {
    if (cub5_status save = cub5_rule_save(rule.get(), out_path.c_str(), format.c_str());
        save != CUB5_OK)
      return report_error(save);
    std::printf("wrote: %s\n", out_path.c_str());
  }
  return 0;
}

int run_verify(const std::string& rule_path, int degree, double tolerance,
               const std::string& report_path) {
  cub5_rule* raw = nullptr;
  if (cub5_status st = cub5_rule_load(rule_path.c_str(), &raw); st != CUB5_OK)
    return report_error(st);
  RulePtr rule(raw);

  int dim = 0;
  cub5_rule_dimension(rule.get(), &dim);
  char* region_raw = nullptr;
  cub5_rule_region(rule.get(), &region_raw);
  std::string region = owned_string(region_raw);

  cub5_measure* mraw = nullptr;
  if (cub5_status st = cub5_measure_from_region(region.c_str(), dim, &mraw); st != CUB5_OK)
    return report_error(st);
  MeasurePtr measure(mraw);

  int max_degree = 6;
  cub5_measure_max_moment_degree(measure.get(), &max_degree);
  if (degree > max_degree) {
    std::printf("note: sweep degree clamped to %d (moment limit for %s)\n", max_degree,
                region.c_str());
    degree = max_degree;
  }

  int pass = 0;
  char* report_raw = nullptr;
  if (cub5_status st =
          cub5_verify(rule.get(), measure.get(), degree, tolerance, &pass, &report_raw);
      st != CUB5_OK)
    return report_error(st);
  std::string report = owned_string(report_raw);

  auto parsed = nlohmann::json::parse(report);
  std::printf("rule: %s (n=%d)\n", region.c_str(), dim);
  std::printf("%-8s %-24s %s\n", "degree", "max rel error", "worst monomial");
  for (const auto& row : parsed["degrees"]) {
    std::string worst;
    for (const auto& e : row["worst_monomial"]) worst += std::to_string(e.get<int>()) + " ";
    std::printf("%-8d %-24.17g [%s]\n", row["degree"].get<int>(),
                row["max_rel_error"].get<double>(), worst.c_str());
  }
  std::printf("tolerance: %.17g\n", tolerance);
  std::printf("%s\n", pass ? "PASS" : "FAIL");
  if (!report_path.empty()) {
    FILE* f = std::fopen(report_path.c_str(), "wb");
    if (!f) {
      std::fprintf(stderr, "error: cannot write '%s'\n", report_path.c_str());
      return 1;
    }
    std::fwrite(report.data(), 1, report.size(), f);
    std::fclose(f);
    std::printf("wrote: %s\n", report_path.c_str());
  }
  return pass ? 0 : 3;
}

int run_integrate(const std::string& rule_path, const std::string& expr) {
  cub5_rule* raw = nullptr;
  if (cub5_status st = cub5_rule_load(rule_path.c_str(), &raw); st != CUB5_OK)
    return report_error(st);
  RulePtr rule(raw);

  int dim = 0;
  cub5_rule_dimension(rule.get(), &dim);
  cub5_poly* praw = nullptr;
  if (cub5_status st = cub5_poly_parse(expr.c_str(), dim, &praw); st != CUB5_OK)
    return report_error(st);
  PolyPtr poly(praw);

  double value = 0.0;
  if (cub5_status st = cub5_rule_apply(rule.get(), poly.get(), &value); st != CUB5_OK)
    return report_error(st);
  char* formatted_raw = nullptr;
  cub5_poly_format(poly.get(), &formatted_raw);
  std::printf("integrand: %s\n", owned_string(formatted_raw).c_str());
  std::printf("rule value: %.17g\n", value);

  char* region_raw = nullptr;
  cub5_rule_region(rule.get(), &region_raw);
  std::string region = owned_string(region_raw);
  cub5_measure* mraw = nullptr;
  if (cub5_measure_from_region(region.c_str(), dim, &mraw) != CUB5_OK) {
    std::printf("exact value: unavailable (no oracle for region '%s')\n", region.c_str());
    return 0;
  }
  MeasurePtr measure(mraw);
  int max_degree = 6, poly_degree = 0;
  cub5_measure_max_moment_degree(measure.get(), &max_degree);
  cub5_poly_degree(poly.get(), &poly_degree);
  if (poly_degree > max_degree) {
    std::printf("exact value: unavailable (degree %d beyond the moment limit %d)\n", poly_degree,
                max_degree);
    return 0;
  }
  double exact = 0.0, mass = 0.0;
  cub5_measure_integrate(measure.get(), poly.get(), &exact);
  cub5_measure_mass(measure.get(), &mass);
  double denom = exact == 0.0 ? mass : std::abs(exact);
  std::printf("exact value: %.17g\n", exact);
  std::printf("relative error: %.17g\n", std::abs(value - exact) / denom);
  return 0;
}

int run_bounds(int n, int degree, std::optional<long long> points, bool verbose) {
  long long moller = 0;
  if (cub5_status st = cub5_moller_bound(n, degree, &moller); st != CUB5_OK)
    return report_error(st);
  long long dim = 0;
  cub5_dim_poly_space(n, (degree - 1) / 2, &dim);
  std::printf("dimension: %d\n", n);
  std::printf("degree: %d\n", degree);
  std::printf("dim bound (dim P_n^k): %lld\n", dim);
  std::printf("moller bound: %lld\n", moller);
  if (verbose) {
    long long coarse = 0;
    cub5_double_dim_bound(n, degree, &coarse);
    std::printf("double-dimension form: %lld\n", coarse);
  }
  if (points) {
    std::printf("rule points: %lld\n", *points);
    std::printf("gap: %lld\n", *points - moller);
  }
  return 0;
}

int run_moments(const CommonConfig& cfg, const std::string& monomial) {
  MeasurePtr measure;
  if (cub5_status st = make_measure(cfg, measure); st != CUB5_OK) return report_error(st);
  if (!monomial.empty()) {
    cub5_poly* praw = nullptr;
    if (cub5_status st = cub5_poly_parse(monomial.c_str(), cfg.n, &praw); st != CUB5_OK)
      return report_error(st);
    PolyPtr poly(praw);
    double value = 0.0;
    if (cub5_status st = cub5_measure_integrate(measure.get(), poly.get(), &value);
        st != CUB5_OK)
      return report_error(st);
    std::printf("%.17g\n", value);
    return 0;
  }
  double mass = 0.0;
  cub5_measure_mass(measure.get(), &mass);
  std::printf("region: %s\n", cfg.region.c_str());
  std::printf("mass: %.17g\n", mass);
  const struct {
    const char* label;
    std::vector<int> alpha;
  } rows[] = {
      {"L(x1^2)", {2}},
      {"L(x1^4)", {4}},
      {"L(x1^2*x2^2)", {2, 2}},
      {"L(x1^6)", {6}},
  };
  for (const auto& row : rows) {
    double value = 0.0;
    if (cub5_measure_moment(measure.get(), row.alpha.data(),
                            static_cast<int>(row.alpha.size()), &value) != CUB5_OK) {
      std::printf("%-14s unavailable\n", row.label);
      continue;
    }
    std::printf("%-14s %.17g\n", row.label, value);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fifth-degree cubature rules with near-minimal point counts"};
  app.require_subcommand(1);
  int code = 0;

  CommonConfig cfg;
  auto add_measure_flags = [&](CLI::App* cmd) {
    cmd->add_option("--region", cfg.region, "cube|gaussian|ball|shell|exp-radial")
        ->check(CLI::IsMember({"cube", "gaussian", "ball", "shell", "exp-radial"}));
    cmd->add_option("--n", cfg.n, "dimension (>= 4)")->required();
    cmd->add_option("--alpha", cfg.alpha,
                    "Gegenbauer exponent(s) for the cube weight (1-x^2)^alpha");
    cmd->add_option("--r", cfg.shell_r, "inner radius of the shell region");
  };

  auto* generate = app.add_subcommand("generate", "construct a rule and print its summary");
  add_measure_flags(generate);
  int gen_degree = 5;
  double gen_gamma = 0.0;
  std::string gen_out, gen_format = "json";
  generate->add_option("--degree", gen_degree, "rule degree (5 or 3)")
      ->check(CLI::IsMember({3, 5}));
  auto* gamma_opt = generate->add_option("--gamma", gen_gamma, "scaling parameter override");
  generate->add_option("--out", gen_out, "output file path");
  generate->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  generate->callback([&] {
    std::optional<double> gamma;
    if (gamma_opt->count()) gamma = gen_gamma;
    code = run_generate(cfg, gen_degree, gamma, gen_out, gen_format);
  });

  auto* verify = app.add_subcommand("verify", "check a saved rule against exact moments");
  std::string verify_rule, verify_out;
  int verify_degree = 6;
  double verify_tol = 1e-10;
  verify->add_option("--rule", verify_rule, "rule JSON file")->required();
  verify->add_option("--degree", verify_degree, "sweep degree (default 6)");
  verify->add_option("--tol", verify_tol, "tolerance (default 1e-10)");
  verify->add_option("--out", verify_out, "write the JSON report here");
  verify->callback([&] { code = run_verify(verify_rule, verify_degree, verify_tol, verify_out); });

  auto* integrate = app.add_subcommand("integrate", "apply a saved rule to a polynomial");
  std::string int_rule, int_expr;
  integrate->add_option("--rule", int_rule, "rule JSON file")->required();
  integrate->add_option("--expr", int_expr, "polynomial, e.g. \"3*x1^2*x2 - 0.5*x3\"")
      ->required();
  integrate->callback([&] { code = run_integrate(int_rule, int_expr); });

  auto* bounds = app.add_subcommand("bounds", "node-count lower bounds");
  int bounds_n = 4, bounds_degree = 5;
  long long bounds_points = 0;
  bool bounds_verbose = false;
  bounds->add_option("--n", bounds_n, "dimension")->required();
  bounds->add_option("--degree", bounds_degree, "rule degree (odd)");
  auto* points_opt = bounds->add_option("--points", bounds_points, "compare a rule's point count");
  bounds->add_flag("--verbose", bounds_verbose, "also print the coarse bound");
  bounds->callback([&] {
    std::optional<long long> points;
    if (points_opt->count()) points = bounds_points;
    code = run_bounds(bounds_n, bounds_degree, points, bounds_verbose);
  });

  auto* moments = app.add_subcommand("moments", "closed-form moments of a measure");
  std::string moments_monomial;
  add_measure_flags(moments);
  moments->add_option("--monomial", moments_monomial, "e.g. \"x1^2*x2^2\"");
  moments->callback([&] { code = run_moments(cfg, moments_monomial); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int parse_code = app.exit(e);
    return parse_code == 0 ? 0 : 1;
  }
  return code;
}
