#pragma once

#include <cmath>

namespace cub5 {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Gamma through log-gamma so large arguments stay finite until the final exp.
inline double gamma_fn(double x) { return std::exp(std::lgamma(x)); }

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

/// Surface content V of the unit sphere in R^n.
inline double sphere_surface(int n) {
  return 2.0 * std::exp(0.5 * n * std::log(kPi) - std::lgamma(0.5 * n));
}

}  // namespace cub5
