#pragma once

#include <span>
#include <string>
#include <vector>

namespace cub5 {

enum class MeasureKind {
  product_cube,
  gaussian_full_space,
  unit_ball,
  spherical_shell,
  exp_radial,
  custom_product,
  custom_radial,
};

/// Normalized even moments of one axis weight (m0 == 1 after normalization).
struct AxisMoments {
  double m0 = 1.0;
  double m2 = 0.0;
  double m4 = 0.0;
  double m6 = 0.0;
};

/// The defining values of a spherically symmetric functional:
/// L(1), L(x1^2), L(x1^4), L(x1^2 x2^2), unnormalized.
struct RadialMoments {
  double mass = 0.0;
  double x2 = 0.0;
  double x4 = 0.0;
  double x2x2 = 0.0;
};

/// Region + weight descriptor. Construct through the named factories, which
/// validate dimension (>= 4), parameter ranges and, for custom radial input,
/// the spherical-symmetry identity L(x1^4) = 3 L(x1^2 x2^2).
struct MeasureSpec {
  MeasureKind kind = MeasureKind::product_cube;
  int dimension = 0;
  // Gegenbauer exponents of the per-axis weight (1-x^2)^alpha; empty means the
  // constant weight 1/2 on every axis. Either one shared value or one per axis.
  std::vector<double> alpha;
  double shell_inner_radius = 0.0;
  std::vector<AxisMoments> custom_axes;  // custom_product only
  RadialMoments custom;                  // custom_radial only

  static MeasureSpec cube(int n, std::vector<double> alpha = {});
  static MeasureSpec gaussian(int n);
  static MeasureSpec ball(int n);
  static MeasureSpec shell(int n, double inner_radius);
  static MeasureSpec exp_radial_weight(int n);
  static MeasureSpec custom_product(int n, std::vector<AxisMoments> axes);
  static MeasureSpec custom_radial_measure(int n, RadialMoments moments);

  bool is_product() const {
    return kind == MeasureKind::product_cube || kind == MeasureKind::custom_product;
  }
  bool is_spherical() const { return !is_product(); }

  /// Region membership test with an absolute tolerance on the boundary.
  bool contains(std::span<const double> point, double tol = 1e-12) const;

  /// Canonical textual form, parameters included; round-trips through
  /// from_region_string. Stored in the rule JSON "region" field.
  std::string region_string() const;
  static MeasureSpec from_region_string(const std::string& region, int dimension);
};

}  // namespace cub5
