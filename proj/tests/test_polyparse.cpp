#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

using namespace cub5;

namespace {

std::string message_of(const std::string& input, int dimension) {
  try {
    parse_polynomial(input, dimension);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("basic terms") {
  auto p = parse_polynomial("3*x1^2*x2", 3);
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.at({2, 1}) == 3.0);
  CHECK(p.inferred_dimension == 2);
  CHECK(p.degree() == 3);
}

TEST_CASE("like terms combine in written order") {
  auto p = parse_polynomial("x1 - 0.5*x1", 2);
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.at({1}) == 0.5);
  auto zero = parse_polynomial("x1 - x1", 2);
  CHECK(zero.terms.empty());
  CHECK(zero.format() == "0");
}

TEST_CASE("implicit coefficient and exponent") {
  auto p = parse_polynomial("x1*x2", 4);
  CHECK(p.terms.at({1, 1}) == 1.0);
  auto q = parse_polynomial("x2*x2*x2", 4);
  CHECK(q.terms.at({0, 3}) == 1.0);
}

TEST_CASE("constants and leading signs") {
  CHECK(parse_polynomial("1", 4).terms.at({}) == 1.0);
  CHECK(parse_polynomial("2.5", 4).terms.at({}) == 2.5);
  CHECK(parse_polynomial("-x1", 4).terms.at({1}) == -1.0);
  CHECK(parse_polynomial("+2*x1", 4).terms.at({1}) == 2.0);
  CHECK(parse_polynomial("1e-3*x1^2", 4).terms.at({2}) == 1e-3);
}

TEST_CASE("parse errors carry positions") {
  CHECK(message_of("x1^2*x5", 4).find("variable index 5 exceeds dimension 4") !=
        std::string::npos);
  CHECK(message_of("x1^2*x5", 4).find("position 7") != std::string::npos);
  CHECK(message_of("", 4).find("empty input") != std::string::npos);
  CHECK(message_of("   ", 4).find("empty input") != std::string::npos);
  CHECK(message_of("x1 +", 4).find("dangling operator") != std::string::npos);
  CHECK(message_of("x0", 4).find("1-based") != std::string::npos);
  CHECK(message_of("x1^", 4).find("malformed exponent") != std::string::npos);
  CHECK(message_of("x1^-2", 4).find("exponent") != std::string::npos);
  CHECK(message_of("3x1", 4).find("unexpected character") != std::string::npos);
  CHECK(message_of("x1 & x2", 4).find("unexpected character '&'") != std::string::npos);
  CHECK(message_of("3*", 4).find("expected a variable") != std::string::npos);
  CHECK_THROWS_AS(parse_polynomial("x1", 0), Error);
}

TEST_CASE("whitespace is ignored") {
  auto p = parse_polynomial("  2 * x1 ^ 2  +  x2  ", 2);
  CHECK(p.terms.at({2}) == 2.0);
  CHECK(p.terms.at({0, 1}) == 1.0);
}

TEST_CASE("evaluation") {
  auto p = parse_polynomial("2*x1*x3^2 - 1", 3);
  std::vector<double> x{2.0, 100.0, 3.0};
  CHECK(p.evaluate(x) == 2.0 * 2.0 * 9.0 - 1.0);
}

TEST_CASE("format/parse round-trip on random polynomials") {
  std::mt19937 rng(20240811u);
  std::uniform_int_distribution<int> dim_dist(1, 6);
  std::uniform_int_distribution<int> nterms_dist(1, 8);
  std::uniform_int_distribution<int> exp_dist(0, 5);
  std::uniform_real_distribution<double> coeff_dist(-10.0, 10.0);
  for (int round = 0; round < 200; ++round) {
    int dim = dim_dist(rng);
    Polynomial p;
    int nterms = nterms_dist(rng);
    for (int t = 0; t < nterms; ++t) {
      std::vector<int> exps(static_cast<std::size_t>(dim));
      for (auto& e : exps) e = exp_dist(rng);
      p.add_term(std::move(exps), coeff_dist(rng));
    }
    auto back = parse_polynomial(p.format(), dim == 0 ? 1 : dim);
    CHECK(back.terms == p.terms);
  }
}

TEST_CASE("fuzzed valid expressions satisfy the invariants") {
  std::mt19937 rng(77u);
  std::uniform_int_distribution<int> nterms_dist(1, 6);
  std::uniform_int_distribution<int> nfactors_dist(1, 3);
  std::uniform_int_distribution<int> idx_dist(1, 5);
  std::uniform_int_distribution<int> exp_dist(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> coeff_dist(0.0, 9.0);
  for (int round = 0; round < 300; ++round) {
    std::string input;
    int nterms = nterms_dist(rng);
    for (int t = 0; t < nterms; ++t) {
      if (t) input += coin(rng) ? " + " : " - ";
      bool has_coeff = coin(rng) == 1;
      if (has_coeff) input += std::to_string(coeff_dist(rng));
      int nfactors = nfactors_dist(rng);
      for (int f = 0; f < nfactors; ++f) {
        if (f || has_coeff) input += "*";
        input += "x" + std::to_string(idx_dist(rng));
        if (coin(rng)) input += "^" + std::to_string(exp_dist(rng));
      }
    }
    Polynomial p = parse_polynomial(input, 5);
    for (const auto& [exps, coeff] : p.terms) {
      CHECK(coeff != 0.0);
      CHECK((exps.empty() || exps.back() != 0));
      for (int e : exps) CHECK(e >= 0);
    }
    CHECK(p.inferred_dimension <= 5);
  }
}
