#include "verify.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

#include "error.hpp"
#include "gauss1d.hpp"
#include "multi_index.hpp"

namespace cub5::verify {

namespace {

bool is_antipodal_pair(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != -a[i]) return false;
  return true;
}

}  // namespace

double apply_rule(const constructor::CubatureRule& rule, const Polynomial& poly) {
  if (poly.inferred_dimension > rule.dimension)
    fail(errc::invalid_argument, "polynomial uses variable index " +
                                     std::to_string(poly.inferred_dimension) +
                                     " beyond the rule dimension " +
                                     std::to_string(rule.dimension));
  double sum = 0.0;
  std::size_t i = 0;
  const auto& nodes = rule.nodes;
  while (i < nodes.size()) {
    if (i + 1 < nodes.size() && rule.weights[i] == rule.weights[i + 1] &&
        is_antipodal_pair(nodes[i], nodes[i + 1])) {
      sum += rule.weights[i] * (poly.evaluate(nodes[i]) + poly.evaluate(nodes[i + 1]));
      i += 2;
    } else {
      sum += rule.weights[i] * poly.evaluate(nodes[i]);
      ++i;
    }
  }
  return sum;
}

VerificationReport exactness_sweep(const constructor::CubatureRule& rule,
                                   const moments::MomentOracle& oracle, int max_degree,
                                   double tolerance) {
  if (max_degree < 0 || max_degree > oracle.max_degree())
    fail(errc::invalid_argument, "sweep degree " + std::to_string(max_degree) +
                                     " exceeds the oracle's supported degree " +
                                     std::to_string(oracle.max_degree()));
  if (oracle.measure().dimension != rule.dimension)
    fail(errc::invalid_argument, "rule and oracle dimensions differ");

  VerificationReport report;
  report.tolerance = tolerance;
  report.declared_degree = rule.degree;
  report.degrees.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) {
    report.degrees[static_cast<std::size_t>(d)].degree = d;
    report.degrees[static_cast<std::size_t>(d)].worst_monomial.assign(
        static_cast<std::size_t>(rule.dimension), 0);
  }

  for (const auto& alpha : multi_indices_up_to(rule.dimension, max_degree)) {
    int total = 0;
    for (int a : alpha) total += a;
    double truth = oracle.evaluate(alpha);
    double got = apply_rule(rule, Polynomial::monomial(alpha));
    double denom = truth == 0.0 ? oracle.mass() : std::abs(truth);
    double err = std::abs(got - truth) / denom;
    auto& row = report.degrees[static_cast<std::size_t>(total)];
    if (err > row.max_rel_error) {
      row.max_rel_error = err;
      row.worst_monomial = alpha;
    }
  }

  report.pass = true;
  for (const auto& row : report.degrees)
    if (row.degree <= rule.degree && row.max_rel_error > tolerance) report.pass = false;
  return report;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["degrees"] = nlohmann::ordered_json::array();
  for (const auto& row : degrees) {
    nlohmann::ordered_json r;
    r["degree"] = row.degree;
    r["max_rel_error"] = row.max_rel_error;
    r["worst_monomial"] = row.worst_monomial;
    j["degrees"].push_back(std::move(r));
  }
  j["pass"] = pass;
  j["tolerance"] = tolerance;
  return j.dump(2) + "\n";
}

double brute_force_integral(const MeasureSpec& measure, const Polynomial& poly) {
  bool constant_cube = measure.kind == MeasureKind::product_cube;
  for (double a : measure.alpha) constant_cube = constant_cube && a == 0.0;
  bool gaussian = measure.kind == MeasureKind::gaussian_full_space;
  if (!constant_cube && !gaussian)
    fail(errc::unsupported,
         "brute-force integration supports the constant-weight cube and the Gaussian measure");
  int n = measure.dimension;
  if (n > 8) fail(errc::unsupported, "brute-force integration is limited to n <= 8");
  if (poly.degree() > 6)
    fail(errc::unsupported, "brute-force integration is limited to polynomial degree <= 6");
  if (poly.inferred_dimension > n)
    fail(errc::invalid_argument, "polynomial dimension exceeds the measure dimension");

  Quad1D q = gaussian ? gauss_hermite4() : gauss_legendre4();
  if (constant_cube)
    for (double& w : q.weight) w *= 0.5;  // per-axis weight function 1/2

  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  std::vector<double> point(static_cast<std::size_t>(n));
  double sum = 0.0;
  while (true) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      point[static_cast<std::size_t>(i)] = q.node[static_cast<std::size_t>(digit[i])];
      w *= q.weight[static_cast<std::size_t>(digit[i])];
    }
    sum += w * poly.evaluate(point);
    int pos = n - 1;
    while (pos >= 0 && ++digit[static_cast<std::size_t>(pos)] == 4) {
      digit[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return sum;
}

}  // namespace cub5::verify
