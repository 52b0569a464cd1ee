#pragma once

#include <utility>
#include <vector>

namespace cub5::sphere_rule {

/// Degree-5 rule on the surface of the unit sphere in R^n (n >= 4): the n+1
/// simplex-vertex directions a^(r) with weight A, plus the n(n+1)/2 scaled
/// pair sums b^(kl) with weight B, each used antipodally. A vanishes at n = 7
/// and is negative for n > 7.
struct SphereRule {
  int dimension = 0;
  std::vector<std::vector<double>> nodes_a;
  std::vector<std::vector<double>> nodes_b;
  double weight_a = 0.0;
  double weight_b = 0.0;
  double surface = 0.0;  // V, the surface content
};

/// Simplex directions a^(r), r = 1..n+1, and the pair directions
/// sqrt(n/(2(n-1)))*(a^(k)+a^(l)) for k < l in lexicographic (k,l) order.
std::pair<std::vector<std::vector<double>>, std::vector<std::vector<double>>> mysovskikh_nodes(
    int n);

/// Weights (A, B) with A = n(7-n)V/[2(n+1)^2(n+2)], B = 2(n-1)^2V/[n(n+1)^2(n+2)].
std::pair<double, double> mysovskikh_weights(int n);

SphereRule make_sphere_rule(int n);

}  // namespace cub5::sphere_rule
