#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "constructor.hpp"
#include "error.hpp"
#include "gauss1d.hpp"
#include "moments.hpp"
#include "multi_index.hpp"
#include "polynomial.hpp"
#include "special.hpp"
#include "verify.hpp"

using namespace cub5;
using constructor::build_degree3_rule;
using constructor::build_product_rule;
using constructor::build_rule;
using constructor::build_spherical_rule;
using moments::MomentOracle;
using verify::apply_rule;
using verify::brute_force_integral;
using verify::exactness_sweep;

namespace {

Polynomial random_poly(std::mt19937& rng, int dimension, int max_degree) {
  std::uniform_int_distribution<int> nterms_dist(1, 20);
  std::uniform_real_distribution<double> coeff_dist(-1.0, 1.0);
  std::uniform_int_distribution<int> exp_dist(0, max_degree);
  Polynomial p;
  int nterms = nterms_dist(rng);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(dimension), 0);
    int budget = max_degree;
    for (auto& e : exps) {
      e = std::min(exp_dist(rng), budget);
      budget -= e;
    }
    p.add_term(std::move(exps), coeff_dist(rng));
  }
  return p;
}

double oracle_expansion(const MomentOracle& oracle, const Polynomial& poly) {
  double sum = 0.0;
  for (const auto& [exps, coeff] : poly.terms) sum += coeff * oracle.evaluate(exps);
  return sum;
}

}  // namespace

TEST_CASE("Gauss-Legendre nodes and weights match the closed forms") {
  auto q = verify::gauss_legendre4();
  double inner = std::sqrt((15.0 - 2.0 * std::sqrt(30.0)) / 35.0);
  double outer = std::sqrt((15.0 + 2.0 * std::sqrt(30.0)) / 35.0);
  CHECK(std::abs(q.node[0] + outer) <= 1e-14);
  CHECK(std::abs(q.node[1] + inner) <= 1e-14);
  CHECK(std::abs(q.node[2] - inner) <= 1e-14);
  CHECK(std::abs(q.node[3] - outer) <= 1e-14);
  CHECK(std::abs(q.weight[1] - 0.65214515486254614) <= 1e-14);
  CHECK(std::abs(q.weight[0] - 0.34785484513745386) <= 1e-14);
  CHECK(std::abs(q.weight[0] + q.weight[1] + q.weight[2] + q.weight[3] - 2.0) <= 1e-14);
}

TEST_CASE("Gauss-Hermite nodes and weights match the closed forms") {
  auto q = verify::gauss_hermite4();
  double inner = std::sqrt((3.0 - std::sqrt(6.0)) / 2.0);
  double outer = std::sqrt((3.0 + std::sqrt(6.0)) / 2.0);
  CHECK(std::abs(q.node[0] + outer) <= 1e-14);
  CHECK(std::abs(q.node[1] + inner) <= 1e-14);
  CHECK(std::abs(q.node[2] - inner) <= 1e-14);
  CHECK(std::abs(q.node[3] - outer) <= 1e-14);
  CHECK(std::abs(q.weight[1] - 0.80491409000551284) <= 1e-14);
  CHECK(std::abs(q.weight[0] - 0.081312835447245177) <= 1e-15);
  double sum = q.weight[0] + q.weight[1] + q.weight[2] + q.weight[3];
  CHECK(std::abs(sum - std::sqrt(kPi)) <= 1e-14);
}

TEST_CASE("apply_rule basics") {
  auto rule = build_spherical_rule(MeasureSpec::gaussian(5));
  CHECK(apply_rule(rule, parse_polynomial("1", 5)) ==
        doctest::Approx(rule.mass).epsilon(1e-13));
  // Antipodal pairing cancels odd-total-degree integrands bit-exactly.
  CHECK(apply_rule(rule, parse_polynomial("x1", 5)) == 0.0);
  CHECK(apply_rule(rule, parse_polynomial("x1^3*x2^2", 5)) == 0.0);
  // Even total degree with an odd exponent: zero only up to roundoff.
  CHECK(std::abs(apply_rule(rule, parse_polynomial("x1^3*x2", 5))) <= 1e-14 * rule.mass);
  CHECK(apply_rule(rule, parse_polynomial("x1^2*x2^2", 5)) ==
        doctest::Approx(std::pow(kPi, 2.5) / 4.0).epsilon(1e-12));
  CHECK_THROWS_AS(apply_rule(rule, parse_polynomial("x6^2", 6)), Error);
}

TEST_CASE("brute force on trivial and closed-form integrands") {
  CHECK(brute_force_integral(MeasureSpec::cube(4), parse_polynomial("1", 4)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(brute_force_integral(MeasureSpec::gaussian(4), parse_polynomial("x1^2*x2^4", 4)) ==
        doctest::Approx(3.0 * kPi * kPi / 8.0).epsilon(1e-13));
  CHECK_THROWS_AS(brute_force_integral(MeasureSpec::ball(4), parse_polynomial("1", 4)), Error);
  CHECK_THROWS_AS(brute_force_integral(MeasureSpec::cube(4, {1.0}), parse_polynomial("1", 4)),
                  Error);
  CHECK_THROWS_AS(brute_force_integral(MeasureSpec::cube(4), parse_polynomial("x1^8", 4)),
                  Error);
}

TEST_CASE("the two oracles and the rules agree on random polynomials") {
  std::mt19937 rng(987654321u);
  for (int n : {4, 5, 6}) {
    auto cube = MeasureSpec::cube(n);
    auto gauss = MeasureSpec::gaussian(n);
    MomentOracle cube_oracle(cube), gauss_oracle(gauss);
    auto cube_rule = build_product_rule(cube);
    auto gauss_rule = build_spherical_rule(gauss);
    for (int round = 0; round < 100; ++round) {
      Polynomial p = random_poly(rng, n, 5);
      for (const auto& [measure, oracle, rule] :
           {std::tie(cube, cube_oracle, cube_rule), std::tie(gauss, gauss_oracle, gauss_rule)}) {
        double expansion = oracle_expansion(oracle, p);
        double brute = brute_force_integral(measure, p);
        double scale = std::max(std::abs(expansion), oracle.mass());
        CHECK(std::abs(brute - expansion) <= 1e-10 * scale);
        CHECK(std::abs(apply_rule(rule, p) - brute) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("exactness sweep passes at the declared degree") {
  for (const auto& spec : {MeasureSpec::cube(4), MeasureSpec::gaussian(7),
                           MeasureSpec::shell(5, 0.5), MeasureSpec::exp_radial_weight(6)}) {
    auto rule = build_rule(spec);
    MomentOracle oracle(spec);
    auto report = exactness_sweep(rule, oracle, 6);
    CHECK(report.pass);
    CHECK(report.degrees.size() == 7);
    // Degree exactly 5: the first even degree beyond must miss badly.
    CHECK(report.degrees[6].max_rel_error > 1e-3);
  }
}

TEST_CASE("any admissible gamma keeps degree-5 exactness") {
  for (const auto& spec : {MeasureSpec::cube(5), MeasureSpec::cube(4, {1.5})}) {
    MomentOracle oracle(spec);
    double base = constructor::select_gamma(spec);
    for (double factor : {1.0, 1.5, 3.0}) {
      auto rule = build_product_rule(spec, base * factor);
      CHECK(exactness_sweep(rule, oracle, 5).pass);
    }
  }
}

TEST_CASE("sweep reports are deterministic") {
  auto spec = MeasureSpec::ball(5);
  auto rule = build_spherical_rule(spec);
  MomentOracle oracle(spec);
  auto a = exactness_sweep(rule, oracle, 6).to_json();
  auto b = exactness_sweep(rule, oracle, 6).to_json();
  CHECK(a == b);
  CHECK(a.find("\"degrees\"") != std::string::npos);
  CHECK(a.find("\"worst_monomial\"") != std::string::npos);
  CHECK(a.find("\"tolerance\"") != std::string::npos);
}

TEST_CASE("a corrupted weight flips the sweep to fail") {
  auto spec = MeasureSpec::gaussian(5);
  auto rule = build_spherical_rule(spec);
  MomentOracle oracle(spec);
  rule.weights[3] += 1e-3;
  auto report = exactness_sweep(rule, oracle, 6);
  CHECK_FALSE(report.pass);
}

TEST_CASE("degree-3 rule passes at 3 and fails at 4 on x1^4") {
  auto spec = MeasureSpec::cube(5);
  auto rule = build_degree3_rule(spec);
  MomentOracle oracle(spec);
  auto report = exactness_sweep(rule, oracle, 4);
  CHECK(report.pass);  // declared degree is 3
  CHECK(report.degrees[3].max_rel_error <= 1e-10);
  CHECK(report.degrees[4].max_rel_error > 1e-3);
  std::vector<int> x14{4, 0, 0, 0, 0};
  CHECK(report.degrees[4].worst_monomial == x14);
}

TEST_CASE("sweep degree is capped by the oracle") {
  auto spec = MeasureSpec::custom_radial_measure(
      5, moments::radial_moments(MeasureSpec::ball(5)));
  auto rule = build_spherical_rule(spec);
  MomentOracle oracle(spec);
  CHECK(exactness_sweep(rule, oracle, 5).pass);
  CHECK_THROWS_AS(exactness_sweep(rule, oracle, 6), Error);
}

TEST_CASE("graded-lex enumeration order") {
  auto list = multi_indices_up_to(2, 2);
  std::vector<std::vector<int>> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(list == expected);
  CHECK(multi_indices_up_to(6, 6).size() == 924);  // C(12,6)
}
