#include "polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "error.hpp"

namespace cub5 {

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [exps, coeff] : terms)
    deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
  return deg;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) < inferred_dimension)
    fail(errc::invalid_argument, "point dimension below the polynomial's variable count");
  double sum = 0.0;
  for (const auto& [exps, coeff] : terms) {
    double term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) term *= point[i];
    sum += term;
  }
  return sum;
}

void Polynomial::add_term(std::vector<int> exps, double coeff) {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
  inferred_dimension = std::max(inferred_dimension, static_cast<int>(exps.size()));
  auto it = terms.find(exps);
  if (it == terms.end()) {
    if (coeff != 0.0) terms.emplace(std::move(exps), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0.0) terms.erase(it);
}

Polynomial Polynomial::monomial(std::vector<int> exps, double coeff) {
  Polynomial p;
  p.add_term(std::move(exps), coeff);
  return p;
}

std::string Polynomial::format() const {
  if (terms.empty()) return "0";
  // Graded-lex term order, leading term first.
  std::vector<const std::pair<const std::vector<int>, double>*> ordered;
  ordered.reserve(terms.size());
  for (const auto& t : terms) ordered.push_back(&t);
  auto total = [](const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::sort(ordered.begin(), ordered.end(), [&](const auto* a, const auto* b) {
    int da = total(a->first), db = total(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const auto& [exps, coeff] = *ordered[k];
    if (k == 0)
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    double mag = std::abs(coeff);
    bool wrote_coeff = false;
    if (mag != 1.0 || exps.empty()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", mag);
      out += buf;
      wrote_coeff = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote_coeff) out += '*';
      out += 'x' + std::to_string(i + 1);
      if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
      wrote_coeff = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dimension) : text_(text), dimension_(dimension) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) error("empty input");
    Polynomial poly;
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    while (true) {
      parse_term(poly, sign);
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') error(std::string("unexpected character '") + op + "'");
      ++pos_;
      skip_ws();
      if (at_end()) error("dangling operator");
      sign = op == '-' ? -1.0 : 1.0;
    }
    return poly;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  [[noreturn]] void error(const std::string& message) const {
    fail(errc::parse,
         "parse error at position " + std::to_string(pos_ + 1) + ": " + message);
  }

  double parse_coefficient() {
    double value = 0.0;
    auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) error("malformed coefficient");
    pos_ = static_cast<std::size_t>(p - text_.data());
    return value;
  }

  int parse_integer(const char* what) {
    skip_ws();
    int value = 0;
    auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || p == text_.data() + pos_) error(std::string("malformed ") + what);
    pos_ = static_cast<std::size_t>(p - text_.data());
    return value;
  }

  // factor := 'x' index ['^' exponent]
  void parse_factor(std::vector<int>& exps) {
    skip_ws();
    if (at_end() || peek() != 'x') error("expected a variable ('x<index>')");
    ++pos_;
    std::size_t index_pos = pos_;
    int index = parse_integer("variable index");
    if (index < 1) {
      pos_ = index_pos;
      error("variable index " + std::to_string(index) + " is invalid (indices are 1-based)");
    }
    if (index > dimension_) {
      pos_ = index_pos;
      error("variable index " + std::to_string(index) + " exceeds dimension " +
            std::to_string(dimension_));
    }
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::size_t exp_pos = pos_;
      exponent = parse_integer("exponent");
      if (exponent < 0) {
        pos_ = exp_pos;
        error("malformed exponent (must be nonnegative)");
      }
    }
    if (static_cast<int>(exps.size()) < index) exps.resize(static_cast<std::size_t>(index), 0);
    exps[static_cast<std::size_t>(index) - 1] += exponent;
  }

  // term := coefficient ('*' factor)* | factor ('*' factor)*
  void parse_term(Polynomial& poly, double sign) {
    skip_ws();
    if (at_end()) error("expected a term");
    double coeff = sign;
    std::vector<int> exps;
    char c = peek();
    if ((c >= '0' && c <= '9') || c == '.')
      coeff *= parse_coefficient();
    else
      parse_factor(exps);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(exps);
    }
    poly.add_term(std::move(exps), coeff);
  }

  std::string_view text_;
  int dimension_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int dimension) {
  if (dimension < 1) fail(errc::invalid_argument, "polynomial dimension must be positive");
  return Parser(text, dimension).run();
}

}  // namespace cub5
