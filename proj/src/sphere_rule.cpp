#include "sphere_rule.hpp"

#include <cmath>
#include <string>

#include "error.hpp"
#include "special.hpp"

namespace cub5::sphere_rule {

namespace {

void require_dimension(int n) {
  if (n < 4)
    fail(errc::invalid_argument,
         "sphere rule needs dimension >= 4, got " + std::to_string(n));
}

}  // namespace

std::pair<std::vector<std::vector<double>>, std::vector<std::vector<double>>> mysovskikh_nodes(
    int n) {
  require_dimension(n);
  double nd = n;
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n) + 1,
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int r = 1; r <= n + 1; ++r) {
    for (int i = 1; i <= n; ++i) {
      double& v = a[r - 1][i - 1];
      if (i < r)
        v = -std::sqrt((nd + 1.0) / (nd * (nd - i + 2.0) * (nd - i + 1.0)));
      else if (i == r)
        v = std::sqrt((nd + 1.0) * (nd - r + 1.0) / (nd * (nd - r + 2.0)));
    }
  }
  double pair_scale = std::sqrt(nd / (2.0 * (nd - 1.0)));
  std::vector<std::vector<double>> b;
  b.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int k = 0; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      std::vector<double> node(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) node[i] = pair_scale * (a[k][i] + a[l][i]);
      b.push_back(std::move(node));
    }
  }
  return {std::move(a), std::move(b)};
}

std::pair<double, double> mysovskikh_weights(int n) {
  require_dimension(n);
  double nd = n;
  double v = sphere_surface(n);
  // A is zero at n = 7 by construction, not by rounding.
  double weight_a =
      n == 7 ? 0.0 : nd * (7.0 - nd) * v / (2.0 * (nd + 1.0) * (nd + 1.0) * (nd + 2.0));
  double weight_b = 2.0 * (nd - 1.0) * (nd - 1.0) * v / (nd * (nd + 1.0) * (nd + 1.0) * (nd + 2.0));
  return {weight_a, weight_b};
}

SphereRule make_sphere_rule(int n) {
  SphereRule rule;
  rule.dimension = n;
  auto [a, b] = mysovskikh_nodes(n);
  rule.nodes_a = std::move(a);
  rule.nodes_b = std::move(b);
  auto [wa, wb] = mysovskikh_weights(n);
  rule.weight_a = wa;
  rule.weight_b = wb;
  rule.surface = sphere_surface(n);
  return rule;
}

}  // namespace cub5::sphere_rule
