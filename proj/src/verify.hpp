#pragma once

#include <string>
#include <vector>

#include "constructor.hpp"
#include "measure.hpp"
#include "moments.hpp"
#include "polynomial.hpp"

namespace cub5::verify {

struct DegreeError {
  int degree = 0;
  double max_rel_error = 0.0;
  std::vector<int> worst_monomial;
};

/// Outcome of an exactness sweep. pass reflects only the degrees up to the
/// rule's declared degree; the rows beyond it document how the rule fails.
struct VerificationReport {
  std::vector<DegreeError> degrees;
  bool pass = false;
  double tolerance = 0.0;
  int declared_degree = 0;

  std::string to_json() const;
};

/// Sum of w_i * poly(node_i). Antipodal node pairs (adjacent in constructed
/// rules) are summed pairwise first, so odd polynomials come out exactly zero.
double apply_rule(const constructor::CubatureRule& rule, const Polynomial& poly);

/// Compares the rule against the oracle on every monomial of total degree
/// <= max_degree, in graded-lex order. Errors are relative to the moment, or
/// to the mass when the moment is zero.
VerificationReport exactness_sweep(const constructor::CubatureRule& rule,
                                   const moments::MomentOracle& oracle, int max_degree,
                                   double tolerance = 1e-10);

/// Independent oracle: tensor-product Gauss quadrature with 4 points per axis
/// (exact through per-axis degree 7). Supports the constant-weight cube and
/// the Gaussian measure, polynomial degree <= 6, n <= 8.
double brute_force_integral(const MeasureSpec& measure, const Polynomial& poly);

}  // namespace cub5::verify
