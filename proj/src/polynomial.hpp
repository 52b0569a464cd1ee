#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cub5 {

/// Sparse multivariate polynomial: exponent vector (trailing zeros trimmed)
/// mapped to coefficient. Zero coefficients are never stored.
struct Polynomial {
  std::map<std::vector<int>, double> terms;
  int inferred_dimension = 0;

  int degree() const;
  double evaluate(std::span<const double> point) const;

  /// Adds coeff * x^exps, combining like terms and dropping exact zeros.
  void add_term(std::vector<int> exps, double coeff);

  /// Canonical text form (graded-lex term order, 17 significant digits);
  /// parse(format()) reproduces the identical term map.
  std::string format() const;

  static Polynomial monomial(std::vector<int> exps, double coeff = 1.0);
};

/// Parses the expression grammar
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := coefficient ('*' factor)* | factor ('*' factor)*
///   factor     := 'x' index ['^' exponent]
/// with 1-based variable indices, implicit coefficient 1 and exponent 1, and
/// whitespace ignored. Errors carry the offending position.
Polynomial parse_polynomial(std::string_view text, int dimension);

}  // namespace cub5
