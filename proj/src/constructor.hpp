#pragma once

#include <optional>
#include <string>
#include <vector>

#include "measure.hpp"

namespace cub5::constructor {

/// A constructed cubature rule: weighted nodes plus construction metadata.
/// Immutable after construction; the node order is fixed (sphere a-orbit with
/// +/- pairs adjacent and r ascending, then the b-orbit in lexicographic pair
/// order, then axis points by axis with + before -, then the center) so that
/// serialized rules are byte-stable.
struct CubatureRule {
  int dimension = 0;
  int degree = 5;
  std::string region;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
  double gamma = 0.0;
  std::vector<double> scale_diag;  // the diagonal of the node scaling T
  double mass = 0.0;
  bool points_in_region = true;
  bool has_negative_weights = false;
  bool attains_moller_bound = false;

  long long point_count() const { return static_cast<long long>(weights.size()); }
};

/// Residual moments of L~ = L - Q~ (normalized measure): everything the scaled
/// sphere part misses. Mixed and odd entries vanish identically and are
/// checked, so only L~(1) and the per-axis L~(x_i^2), L~(x_i^4) are kept.
struct ResidualMoments {
  double unit = 0.0;
  std::vector<double> x2;
  std::vector<double> x4;
  // Magnitude scales of the underlying moments, for relative zero tests.
  std::vector<double> x2_scale;
  std::vector<double> x4_scale;
};

/// Solution of the one-dimensional residual moment problem: a +/- point pair
/// per axis plus a center weight. has_axis_points is false when the residual
/// second and fourth moments vanish (the spherically symmetric case).
struct ResidualRule {
  bool has_axis_points = false;
  std::vector<double> node;    // v_{i,1}; v_{i,2} = -v_{i,1}
  std::vector<double> weight;  // w_{i,1} = w_{i,2}
  double center = 0.0;
};

/// Smallest admissible gamma for a product measure: the maximum of the scaling
/// bound, the strict solvability bound (inflated by 1+1e-9 when binding) and
/// the axis-point bound. An explicit override is validated against the same
/// system instead.
double select_gamma(const MeasureSpec& measure, std::optional<double> override_gamma = {});

/// Diagonal of the scaling matrix T for a given gamma.
std::vector<double> scale_diagonal(const MeasureSpec& measure, double gamma);

struct SpherePart {
  std::vector<std::vector<double>> nodes;  // T a^(r), -T a^(r), ..., T b^(j), -T b^(j), ...
  std::vector<double> weights;             // gamma*A*mass and gamma*B*mass
};

/// The scaled sphere orbit with final (mass-scaled) weights. Includes the
/// a-orbit even when its weight vanishes (n = 7); builders drop it there.
SpherePart scaled_sphere_part(const MeasureSpec& measure, double gamma);

ResidualMoments residual_moments(const MeasureSpec& measure, double gamma);

ResidualRule solve_residual(const ResidualMoments& moments);

/// Degree-5 rule for a symmetric product measure on the cube; at most
/// n^2+5n+3 points (n^2+3n+1 at n = 7).
CubatureRule build_product_rule(const MeasureSpec& measure,
                                std::optional<double> gamma_override = {});

/// Degree-5 rule for a spherically symmetric measure; n^2+3n+3 points
/// (n^2+n+1 at n = 7, which meets the lower bound).
CubatureRule build_spherical_rule(const MeasureSpec& measure);

/// Degree-3 rule for a product measure with identical axes: the scaled sphere
/// orbit with the second-moment-matching gamma plus a center point.
CubatureRule build_degree3_rule(const MeasureSpec& measure);

/// Dispatches on the measure kind.
CubatureRule build_rule(const MeasureSpec& measure, std::optional<double> gamma_override = {});

}  // namespace cub5::constructor
