#pragma once

#include <array>
#include <span>
#include <vector>

#include "measure.hpp"

namespace cub5::moments {

/// Integral of x^alpha over the surface of the unit sphere in R^n:
/// 2*Gamma((a1+1)/2)*...*Gamma((an+1)/2) / Gamma((n+|alpha|)/2) when every
/// exponent is even, zero otherwise. alpha may be shorter than n (missing
/// exponents are zero).
double surface_monomial_integral(int n, std::span<const int> alpha);

/// Normalized 1-D moments (m0=1, m2, m4, m6) of one axis of a product measure.
/// Constant weight 1/2: m_{2k} = 1/(2k+1). Gegenbauer weight (1-x^2)^alpha:
/// m_{2k} = B(k+1/2, alpha+1) / B(1/2, alpha+1).
AxisMoments product_axis_moments(const MeasureSpec& spec, int axis);

/// Unnormalized mass, L(x1^2), L(x1^4), L(x1^2 x2^2) of a spherically
/// symmetric measure, from the closed-form radial factors.
RadialMoments radial_moments(const MeasureSpec& spec);

/// Closed-form L(x^alpha) for any multi-index of total degree <= max_degree()
/// (6 for every measure except custom radial input, which pins degree 5).
class MomentOracle {
 public:
  explicit MomentOracle(MeasureSpec spec);

  /// Exact moment of the monomial x^alpha; exactly 0 for odd multi-indices.
  double evaluate(std::span<const int> alpha) const;
  double mass() const { return mass_; }
  int max_degree() const { return max_degree_; }
  const MeasureSpec& measure() const { return spec_; }

 private:
  MeasureSpec spec_;
  std::vector<AxisMoments> axes_;          // product path
  std::array<double, 4> radial_factor_{};  // R_k for k = 0,2,4,6 (spherical path)
  double mass_ = 0.0;
  int max_degree_ = 6;
};

}  // namespace cub5::moments
