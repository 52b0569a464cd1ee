#include "cubature5.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "bounds.hpp"
#include "constructor.hpp"
#include "error.hpp"
#include "measure.hpp"
#include "moments.hpp"
#include "polynomial.hpp"
#include "rule_io.hpp"
#include "verify.hpp"

struct cub5_measure {
  cub5::MeasureSpec spec;
  cub5::moments::MomentOracle oracle;
  explicit cub5_measure(cub5::MeasureSpec s) : spec(s), oracle(std::move(s)) {}
};

struct cub5_rule {
  cub5::constructor::CubatureRule rule;
};

struct cub5_poly {
  cub5::Polynomial poly;
};

namespace {

thread_local std::string t_error;

cub5_status map_code(cub5::errc code) {
  switch (code) {
    case cub5::errc::invalid_argument: return CUB5_ERR_INVALID_ARGUMENT;
    case cub5::errc::construction: return CUB5_ERR_CONSTRUCTION;
    case cub5::errc::io: return CUB5_ERR_IO;
    case cub5::errc::parse: return CUB5_ERR_PARSE;
    case cub5::errc::verification: return CUB5_ERR_VERIFICATION;
    case cub5::errc::unsupported: return CUB5_ERR_UNSUPPORTED;
  }
  return CUB5_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
cub5_status guarded(Fn&& fn) {
  try {
    fn();
    return CUB5_OK;
  } catch (const cub5::Error& e) {
    t_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_error = e.what();
    return CUB5_ERR_CONSTRUCTION;
  }
}

cub5_status null_argument(const char* what) {
  t_error = std::string(what) + " must not be null";
  return CUB5_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* cub5_last_error(void) { return t_error.c_str(); }

void cub5_free(void* ptr) { std::free(ptr); }

cub5_status cub5_measure_cube(int n, const double* alpha, int alpha_len, cub5_measure** out) {
  if (!out) return null_argument("out");
  if (alpha_len > 0 && !alpha) return null_argument("alpha");
  return guarded([&] {
    std::vector<double> a(alpha, alpha + (alpha_len > 0 ? alpha_len : 0));
    *out = new cub5_measure(cub5::MeasureSpec::cube(n, std::move(a)));
  });
}

cub5_status cub5_measure_gaussian(int n, cub5_measure** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cub5_measure(cub5::MeasureSpec::gaussian(n)); });
}

cub5_status cub5_measure_ball(int n, cub5_measure** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cub5_measure(cub5::MeasureSpec::ball(n)); });
}

cub5_status cub5_measure_shell(int n, double inner_radius, cub5_measure** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cub5_measure(cub5::MeasureSpec::shell(n, inner_radius)); });
}

cub5_status cub5_measure_exp_radial(int n, cub5_measure** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cub5_measure(cub5::MeasureSpec::exp_radial_weight(n)); });
}

cub5_status cub5_measure_custom_product(int n, const double* m2, const double* m4,
                                        const double* m6, cub5_measure** out) {
  if (!out) return null_argument("out");
  if (!m2 || !m4 || !m6) return null_argument("moment arrays");
  return guarded([&] {
    std::vector<cub5::AxisMoments> axes(static_cast<std::size_t>(n > 0 ? n : 0));
    for (std::size_t i = 0; i < axes.size(); ++i) axes[i] = {1.0, m2[i], m4[i], m6[i]};
    *out = new cub5_measure(cub5::MeasureSpec::custom_product(n, std::move(axes)));
  });
}

cub5_status cub5_measure_custom_radial(int n, double mass, double x2, double x4, double x2x2,
                                       cub5_measure** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cub5_measure(
        cub5::MeasureSpec::custom_radial_measure(n, {mass, x2, x4, x2x2}));
  });
}

cub5_status cub5_measure_from_region(const char* region, int n, cub5_measure** out) {
  if (!out) return null_argument("out");
  if (!region) return null_argument("region");
  return guarded(
      [&] { *out = new cub5_measure(cub5::MeasureSpec::from_region_string(region, n)); });
}

void cub5_measure_free(cub5_measure* measure) { delete measure; }

cub5_status cub5_measure_region(const cub5_measure* measure, char** out) {
  if (!measure) return null_argument("measure");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(measure->spec.region_string()); });
}

cub5_status cub5_measure_mass(const cub5_measure* measure, double* out) {
  if (!measure) return null_argument("measure");
  if (!out) return null_argument("out");
  *out = measure->oracle.mass();
  return CUB5_OK;
}

cub5_status cub5_measure_moment(const cub5_measure* measure, const int* alpha, int alpha_len,
                                double* out) {
  if (!measure) return null_argument("measure");
  if (!out) return null_argument("out");
  if (alpha_len > 0 && !alpha) return null_argument("alpha");
  return guarded([&] {
    *out = measure->oracle.evaluate(
        std::span<const int>(alpha, static_cast<std::size_t>(alpha_len > 0 ? alpha_len : 0)));
  });
}

cub5_status cub5_measure_max_moment_degree(const cub5_measure* measure, int* out) {
  if (!measure) return null_argument("measure");
  if (!out) return null_argument("out");
  *out = measure->oracle.max_degree();
  return CUB5_OK;
}

cub5_status cub5_measure_integrate(const cub5_measure* measure, const cub5_poly* poly,
                                   double* out) {
  if (!measure) return null_argument("measure");
  if (!poly) return null_argument("poly");
  if (!out) return null_argument("out");
  return guarded([&] {
    double sum = 0.0;
    for (const auto& [exps, coeff] : poly->poly.terms)
      sum += coeff * measure->oracle.evaluate(exps);
    *out = sum;
  });
}

cub5_status cub5_rule_build(const cub5_measure* measure, const double* gamma_override,
                            cub5_rule** out) {
  if (!measure) return null_argument("measure");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::optional<double> gamma;
    if (gamma_override) gamma = *gamma_override;
    *out = new cub5_rule{cub5::constructor::build_rule(measure->spec, gamma)};
  });
}

cub5_status cub5_rule_build_degree3(const cub5_measure* measure, cub5_rule** out) {
  if (!measure) return null_argument("measure");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = new cub5_rule{cub5::constructor::build_degree3_rule(measure->spec)}; });
}

void cub5_rule_free(cub5_rule* rule) { delete rule; }

cub5_status cub5_rule_dimension(const cub5_rule* rule, int* out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  *out = rule->rule.dimension;
  return CUB5_OK;
}

cub5_status cub5_rule_degree(const cub5_rule* rule, int* out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  *out = rule->rule.degree;
  return CUB5_OK;
}

cub5_status cub5_rule_point_count(const cub5_rule* rule, long long* out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  *out = rule->rule.point_count();
  return CUB5_OK;
}

cub5_status cub5_rule_gamma(const cub5_rule* rule, double* out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  *out = rule->rule.gamma;
  return CUB5_OK;
}

cub5_status cub5_rule_mass(const cub5_rule* rule, double* out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  *out = rule->rule.mass;
  return CUB5_OK;
}

cub5_status cub5_rule_region(const cub5_rule* rule, char** out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(rule->rule.region); });
}

cub5_status cub5_rule_flags(const cub5_rule* rule, int* points_in_region,
                            int* has_negative_weights, int* attains_moller_bound) {
  if (!rule) return null_argument("rule");
  if (points_in_region) *points_in_region = rule->rule.points_in_region ? 1 : 0;
  if (has_negative_weights) *has_negative_weights = rule->rule.has_negative_weights ? 1 : 0;
  if (attains_moller_bound) *attains_moller_bound = rule->rule.attains_moller_bound ? 1 : 0;
  return CUB5_OK;
}

cub5_status cub5_rule_nodes(const cub5_rule* rule, double* buffer, size_t buffer_len) {
  if (!rule) return null_argument("rule");
  if (!buffer) return null_argument("buffer");
  const auto& r = rule->rule;
  size_t needed = r.nodes.size() * static_cast<size_t>(r.dimension);
  if (buffer_len < needed) {
    t_error = "node buffer too small: need " + std::to_string(needed) + " doubles";
    return CUB5_ERR_INVALID_ARGUMENT;
  }
  size_t k = 0;
  for (const auto& node : r.nodes)
    for (double x : node) buffer[k++] = x;
  return CUB5_OK;
}

cub5_status cub5_rule_weights(const cub5_rule* rule, double* buffer, size_t buffer_len) {
  if (!rule) return null_argument("rule");
  if (!buffer) return null_argument("buffer");
  const auto& r = rule->rule;
  if (buffer_len < r.weights.size()) {
    t_error = "weight buffer too small: need " + std::to_string(r.weights.size()) + " doubles";
    return CUB5_ERR_INVALID_ARGUMENT;
  }
  for (size_t i = 0; i < r.weights.size(); ++i) buffer[i] = r.weights[i];
  return CUB5_OK;
}

cub5_status cub5_rule_save(const cub5_rule* rule, const char* path, const char* format) {
  if (!rule) return null_argument("rule");
  if (!path) return null_argument("path");
  if (!format) return null_argument("format");
  return guarded([&] { cub5::rule_io::save(rule->rule, path, format); });
}

cub5_status cub5_rule_to_json(const cub5_rule* rule, char** out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(cub5::rule_io::to_json_string(rule->rule)); });
}

cub5_status cub5_rule_load(const char* path, cub5_rule** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cub5_rule{cub5::rule_io::load_json(path)}; });
}

cub5_status cub5_poly_parse(const char* text, int dimension, cub5_poly** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new cub5_poly{cub5::parse_polynomial(text, dimension)}; });
}

void cub5_poly_free(cub5_poly* poly) { delete poly; }

cub5_status cub5_poly_degree(const cub5_poly* poly, int* out) {
  if (!poly) return null_argument("poly");
  if (!out) return null_argument("out");
  *out = poly->poly.degree();
  return CUB5_OK;
}

cub5_status cub5_poly_format(const cub5_poly* poly, char** out) {
  if (!poly) return null_argument("poly");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(poly->poly.format()); });
}

cub5_status cub5_rule_apply(const cub5_rule* rule, const cub5_poly* poly, double* out) {
  if (!rule) return null_argument("rule");
  if (!poly) return null_argument("poly");
  if (!out) return null_argument("out");
  return guarded([&] { *out = cub5::verify::apply_rule(rule->rule, poly->poly); });
}

cub5_status cub5_verify(const cub5_rule* rule, const cub5_measure* measure, int max_degree,
                        double tolerance, int* pass, char** report_json) {
  if (!rule) return null_argument("rule");
  if (!measure) return null_argument("measure");
  if (!pass) return null_argument("pass");
  return guarded([&] {
    auto report =
        cub5::verify::exactness_sweep(rule->rule, measure->oracle, max_degree, tolerance);
    *pass = report.pass ? 1 : 0;
    if (report_json) *report_json = copy_string(report.to_json());
  });
}

cub5_status cub5_dim_poly_space(int n, int k, long long* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = cub5::bounds::dim_poly_space(n, k); });
}

cub5_status cub5_moller_bound(int n, int degree, long long* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = cub5::bounds::moller_bound(n, degree); });
}

cub5_status cub5_double_dim_bound(int n, int degree, long long* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = cub5::bounds::double_dim_bound(n, degree); });
}

}  // extern "C"
