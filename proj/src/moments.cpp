#include "moments.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"
#include "special.hpp"

namespace cub5::moments {

namespace {

constexpr double kLog2 = 0.69314718055994530941723212145817657;

int checked_total_degree(std::span<const int> alpha) {
  int total = 0;
  for (int a : alpha) {
    if (a < 0) fail(errc::invalid_argument, "negative exponent in multi-index");
    total += a;
  }
  return total;
}

// Radial factor R_k = integral of rho(r) r^{n-1+k} dr over the radial support,
// so that L(x^alpha) = R_{|alpha|} * surface_monomial_integral(n, alpha).
double radial_factor(const MeasureSpec& spec, int k) {
  double n = spec.dimension;
  switch (spec.kind) {
    case MeasureKind::gaussian_full_space:
      return 0.5 * gamma_fn(0.5 * (n + k));
    case MeasureKind::unit_ball:
      return 1.0 / (n + k);
    case MeasureKind::spherical_shell:
      return (1.0 - std::pow(spec.shell_inner_radius, n + k)) / (n + k);
    case MeasureKind::exp_radial:
      return gamma_fn(n + k);
    default:
      fail(errc::invalid_argument, "measure has no closed-form radial factor");
  }
}

}  // namespace

double surface_monomial_integral(int n, std::span<const int> alpha) {
  if (n < 2) fail(errc::invalid_argument, "surface integral needs n >= 2");
  if (static_cast<int>(alpha.size()) > n)
    fail(errc::invalid_argument, "multi-index longer than dimension");
  int total = checked_total_degree(alpha);
  for (int a : alpha)
    if (a % 2 != 0) return 0.0;
  double log_num = kLog2;
  for (int a : alpha) log_num += std::lgamma(0.5 * (a + 1));
  log_num += (n - static_cast<int>(alpha.size())) * std::lgamma(0.5);
  return std::exp(log_num - std::lgamma(0.5 * (n + total)));
}

AxisMoments product_axis_moments(const MeasureSpec& spec, int axis) {
  if (!spec.is_product())
    fail(errc::invalid_argument, "per-axis moments are defined for product measures only");
  if (axis < 0 || axis >= spec.dimension)
    fail(errc::invalid_argument, "axis " + std::to_string(axis) + " out of range");
  if (spec.kind == MeasureKind::custom_product) return spec.custom_axes[axis];
  if (spec.alpha.empty()) return {1.0, 1.0 / 3.0, 1.0 / 5.0, 1.0 / 7.0};
  double a = spec.alpha[axis];
  auto m = [&](int k) { return std::exp(log_beta(k + 0.5, a + 1.0) - log_beta(0.5, a + 1.0)); };
  return {1.0, m(1), m(2), m(3)};
}

RadialMoments radial_moments(const MeasureSpec& spec) {
  if (!spec.is_spherical())
    fail(errc::invalid_argument, "radial moments are defined for spherically symmetric measures");
  if (spec.kind == MeasureKind::custom_radial) return spec.custom;
  double n = spec.dimension;
  double v = sphere_surface(spec.dimension);
  RadialMoments out;
  out.mass = radial_factor(spec, 0) * v;
  out.x2 = radial_factor(spec, 2) * v / n;
  out.x2x2 = radial_factor(spec, 4) * v / (n * (n + 2.0));
  out.x4 = 3.0 * out.x2x2;
  return out;
}

MomentOracle::MomentOracle(MeasureSpec spec) : spec_(std::move(spec)) {
  if (spec_.is_product()) {
    axes_.reserve(static_cast<std::size_t>(spec_.dimension));
    for (int i = 0; i < spec_.dimension; ++i) axes_.push_back(product_axis_moments(spec_, i));
    mass_ = 1.0;
    return;
  }
  double v = sphere_surface(spec_.dimension);
  if (spec_.kind == MeasureKind::custom_radial) {
    double n = spec_.dimension;
    radial_factor_ = {spec_.custom.mass / v, spec_.custom.x2 * n / v,
                      spec_.custom.x2x2 * n * (n + 2.0) / v,
                      std::numeric_limits<double>::quiet_NaN()};
    max_degree_ = 5;  // the four defining values do not pin the 6th radial moment
  } else {
    radial_factor_ = {radial_factor(spec_, 0), radial_factor(spec_, 2), radial_factor(spec_, 4),
                      radial_factor(spec_, 6)};
  }
  mass_ = radial_factor_[0] * v;
}

double MomentOracle::evaluate(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) > spec_.dimension)
    fail(errc::invalid_argument, "multi-index longer than dimension");
  int total = checked_total_degree(alpha);
  if (total > max_degree_)
    fail(errc::invalid_argument, "moment of degree " + std::to_string(total) +
                                     " exceeds the supported degree " + std::to_string(max_degree_));
  if (total == 0) return mass_;
  for (int a : alpha)
    if (a % 2 != 0) return 0.0;
  if (spec_.is_product()) {
    double value = 1.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      switch (alpha[i]) {
        case 0: break;
        case 2: value *= axes_[i].m2; break;
        case 4: value *= axes_[i].m4; break;
        case 6: value *= axes_[i].m6; break;
        default: fail(errc::invalid_argument, "unsupported even exponent");
      }
    }
    return value;
  }
  return radial_factor_[total / 2] * surface_monomial_integral(spec_.dimension, alpha);
}

}  // namespace cub5::moments
