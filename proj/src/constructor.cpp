#include "constructor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bounds.hpp"
#include "error.hpp"
#include "moments.hpp"
#include "special.hpp"
#include "sphere_rule.hpp"

namespace cub5::constructor {

namespace {

constexpr double kGammaInflation = 1.0 + 1e-9;
constexpr double kZeroWeightTol = 1e-14;   // relative to mass
constexpr double kResidualZeroTol = 1e-9;  // relative to the moment scale

// Moments of the measure normalized to L(1) = 1, plus the true mass for the
// final rescaling. Product measures carry one (x2, x4) pair per axis;
// spherically symmetric ones a single shared pair plus x2x2.
struct Normalized {
  double mass = 1.0;
  std::vector<double> x2;
  std::vector<double> x4;
  double x2x2 = 0.0;
};

Normalized normalized_moments(const MeasureSpec& measure) {
  Normalized nm;
  if (measure.is_product()) {
    nm.x2.reserve(static_cast<std::size_t>(measure.dimension));
    nm.x4.reserve(static_cast<std::size_t>(measure.dimension));
    for (int i = 0; i < measure.dimension; ++i) {
      AxisMoments am = moments::product_axis_moments(measure, i);
      nm.x2.push_back(am.m2);
      nm.x4.push_back(am.m4);
    }
    return nm;
  }
  RadialMoments rm = moments::radial_moments(measure);
  if (!(rm.mass > 0.0)) fail(errc::construction, "measure has nonpositive mass");
  nm.mass = rm.mass;
  nm.x2.push_back(rm.x2 / rm.mass);
  nm.x4.push_back(rm.x4 / rm.mass);
  nm.x2x2 = rm.x2x2 / rm.mass;
  return nm;
}

// L1(x1^2 x2^2) on the unit sphere surface: pi^{n/2} / (2 Gamma(n/2+2)).
double pair_surface_moment(int n) {
  return std::exp(0.5 * n * std::log(kPi) - std::lgamma(0.5 * n + 2.0)) / 2.0;
}

// The strict solvability bound on sqrt(gamma):
// sqrt(2 Gamma(n/2+2)) / ((n+2) pi^{n/4}). L~(x_i^2) changes sign there.
double strict_sqrt_bound(int n) {
  return std::exp(0.5 * (std::log(2.0) + std::lgamma(0.5 * n + 2.0))) /
         ((n + 2.0) * std::pow(kPi, 0.25 * n));
}

double axis_x2(const Normalized& nm, int axis) {
  return nm.x2.size() == 1 ? nm.x2[0] : nm.x2[static_cast<std::size_t>(axis)];
}

double axis_x4(const Normalized& nm, int axis) {
  return nm.x4.size() == 1 ? nm.x4[0] : nm.x4[static_cast<std::size_t>(axis)];
}

std::vector<double> negated(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

void append_orbit(CubatureRule& rule, const std::vector<std::vector<double>>& directions,
                  const std::vector<double>& diag, double weight) {
  for (const auto& dir : directions) {
    std::vector<double> node(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) node[i] = diag[i] * dir[i];
    rule.nodes.push_back(node);
    rule.weights.push_back(weight);
    rule.nodes.push_back(negated(node));
    rule.weights.push_back(weight);
  }
}

void finalize(CubatureRule& rule, const MeasureSpec& measure) {
  rule.dimension = measure.dimension;
  rule.region = measure.region_string();
  rule.mass = measure.is_product() ? 1.0 : moments::radial_moments(measure).mass;

  rule.points_in_region = true;
  for (const auto& node : rule.nodes)
    rule.points_in_region = rule.points_in_region && measure.contains(node);
  rule.has_negative_weights = false;
  for (double w : rule.weights) rule.has_negative_weights = rule.has_negative_weights || w < 0.0;
  rule.attains_moller_bound =
      rule.dimension <= 80 && rule.point_count() == bounds::moller_bound(rule.dimension, rule.degree);

  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  if (std::abs(sum - rule.mass) > 1e-12 * std::abs(rule.mass))
    fail(errc::construction, "constructed weights do not reproduce the total mass");
}

// Assembles sphere orbit (+ optional axis points) + center, in the canonical
// node order, with normalized weights rescaled by the mass.
CubatureRule assemble(const MeasureSpec& measure, double gamma, const ResidualRule& residual,
                      int degree) {
  int n = measure.dimension;
  auto sphere = sphere_rule::make_sphere_rule(n);
  std::vector<double> diag = scale_diagonal(measure, gamma);
  double mass = measure.is_product() ? 1.0 : moments::radial_moments(measure).mass;

  CubatureRule rule;
  rule.degree = degree;
  rule.gamma = gamma;
  rule.scale_diag = diag;
  // The a-orbit weight gamma*A vanishes identically at n = 7; drop the orbit
  // there so the point count claims hold with equality.
  if (n != 7) append_orbit(rule, sphere.nodes_a, diag, gamma * sphere.weight_a * mass);
  append_orbit(rule, sphere.nodes_b, diag, gamma * sphere.weight_b * mass);
  if (residual.has_axis_points) {
    for (int i = 0; i < n; ++i) {
      std::vector<double> node(static_cast<std::size_t>(n), 0.0);
      node[static_cast<std::size_t>(i)] = residual.node[static_cast<std::size_t>(i)];
      rule.nodes.push_back(node);
      rule.weights.push_back(residual.weight[static_cast<std::size_t>(i)] * mass);
      node[static_cast<std::size_t>(i)] = -residual.node[static_cast<std::size_t>(i)];
      rule.nodes.push_back(std::move(node));
      rule.weights.push_back(residual.weight[static_cast<std::size_t>(i)] * mass);
    }
  }
  if (std::abs(residual.center) > kZeroWeightTol) {
    rule.nodes.emplace_back(static_cast<std::size_t>(n), 0.0);
    rule.weights.push_back(residual.center * mass);
  }
  finalize(rule, measure);
  return rule;
}

}  // namespace

double select_gamma(const MeasureSpec& measure, std::optional<double> override_gamma) {
  if (!measure.is_product())
    fail(errc::invalid_argument, "gamma selection applies to product measures");
  int n = measure.dimension;
  Normalized nm = normalized_moments(measure);
  double sigma22 = pair_surface_moment(n);
  double strict = strict_sqrt_bound(n) * strict_sqrt_bound(n);

  if (override_gamma) {
    double gamma = *override_gamma;
    if (!(gamma > 0.0)) fail(errc::invalid_argument, "gamma override must be positive");
    ResidualMoments res = residual_moments(measure, gamma);
    solve_residual(res);  // throws when the override is inadmissible
    return gamma;
  }

  int negative = 0, positive = 0, zero = 0;
  for (int i = 0; i < n; ++i) {
    double lt4 = nm.x4[static_cast<std::size_t>(i)] - 3.0 * nm.x2[static_cast<std::size_t>(i)] *
                                                          nm.x2[static_cast<std::size_t>(i)];
    double scale = std::max(nm.x4[static_cast<std::size_t>(i)],
                            3.0 * nm.x2[static_cast<std::size_t>(i)] *
                                nm.x2[static_cast<std::size_t>(i)]);
    if (std::abs(lt4) <= 1e-14 * scale)
      ++zero;
    else if (lt4 < 0.0)
      ++negative;
    else
      ++positive;
  }
  if (zero == n) return strict;  // residual vanishes entirely; center point handles L~(1)
  if ((negative && positive) || zero)
    fail(errc::construction,
         "residual fourth moments L(x_i^4) - 3 L(x_i^2)^2 change sign across axes; "
         "no gamma satisfies L~(x_i^2)*L~(x_i^4) > 0 on every axis");

  // Scaling bound (a_ii <= 1): gamma >= L(x_i^2)^2 / L1(x1^2 x2^2).
  double scaling_bound = 0.0;
  for (double m2 : nm.x2) scaling_bound = std::max(scaling_bound, m2 * m2 / sigma22);

  if (negative == n) {
    // Axis-point bound (0 < v_i <= 1); strictly above the solvability bound.
    double axis_bound = 0.0;
    for (int i = 0; i < n; ++i) {
      double m2 = nm.x2[static_cast<std::size_t>(i)];
      double m4 = nm.x4[static_cast<std::size_t>(i)];
      double ratio = (m2 - m4 + 3.0 * m2 * m2) / m2;
      axis_bound = std::max(axis_bound, ratio * ratio * strict);
    }
    double gamma = std::max(scaling_bound, axis_bound);
    if (gamma <= strict) gamma = strict * kGammaInflation;
    return gamma;
  }

  // L~(x_i^4) > 0 everywhere: solvable only below the strict bound. Take the
  // scaling bound when it solves; otherwise the points cannot all stay inside
  // and gamma is placed just below the solvability threshold.
  if (scaling_bound < strict) return scaling_bound;
  return strict / kGammaInflation;
}

std::vector<double> scale_diagonal(const MeasureSpec& measure, double gamma) {
  if (!(gamma > 0.0)) fail(errc::invalid_argument, "gamma must be positive");
  int n = measure.dimension;
  Normalized nm = normalized_moments(measure);
  double sigma22 = pair_surface_moment(n);
  std::vector<double> diag(static_cast<std::size_t>(n));
  if (measure.is_product()) {
    double root = std::sqrt(gamma * sigma22);
    for (int i = 0; i < n; ++i) {
      double radicand = axis_x2(nm, i) / root;
      if (!(radicand > 0.0)) fail(errc::construction, "nonpositive scaling radicand");
      diag[static_cast<std::size_t>(i)] = std::sqrt(radicand);
    }
    return diag;
  }
  double radicand = nm.x2x2 / (gamma * sigma22);
  if (!(radicand > 0.0)) fail(errc::construction, "nonpositive scaling radicand");
  std::fill(diag.begin(), diag.end(), std::sqrt(std::sqrt(radicand)));
  return diag;
}

SpherePart scaled_sphere_part(const MeasureSpec& measure, double gamma) {
  int n = measure.dimension;
  auto sphere = sphere_rule::make_sphere_rule(n);
  std::vector<double> diag = scale_diagonal(measure, gamma);
  double mass = measure.is_product() ? 1.0 : moments::radial_moments(measure).mass;
  CubatureRule staging;
  append_orbit(staging, sphere.nodes_a, diag, gamma * sphere.weight_a * mass);
  append_orbit(staging, sphere.nodes_b, diag, gamma * sphere.weight_b * mass);
  return {std::move(staging.nodes), std::move(staging.weights)};
}

ResidualMoments residual_moments(const MeasureSpec& measure, double gamma) {
  if (!(gamma > 0.0)) fail(errc::invalid_argument, "gamma must be positive");
  int n = measure.dimension;
  Normalized nm = normalized_moments(measure);
  double sigma22 = pair_surface_moment(n);
  double inv_c = strict_sqrt_bound(n);
  double c = 1.0 / inv_c;

  ResidualMoments res;
  res.unit = 1.0 - gamma * sphere_surface(n);
  res.x2.resize(static_cast<std::size_t>(n));
  res.x4.resize(static_cast<std::size_t>(n));
  res.x2_scale.resize(static_cast<std::size_t>(n));
  res.x4_scale.resize(static_cast<std::size_t>(n));

  std::vector<double> diag = scale_diagonal(measure, gamma);
  if (measure.is_product()) {
    double root_gamma = std::sqrt(gamma);
    for (int i = 0; i < n; ++i) {
      double m2 = axis_x2(nm, i), m4 = axis_x4(nm, i);
      res.x2[static_cast<std::size_t>(i)] = m2 * (1.0 - c * root_gamma);
      res.x4[static_cast<std::size_t>(i)] = m4 - 3.0 * m2 * m2;
      res.x2_scale[static_cast<std::size_t>(i)] = m2;
      res.x4_scale[static_cast<std::size_t>(i)] = std::max(m4, 3.0 * m2 * m2);
    }
    // Mixed fourth residuals vanish because the sphere part reproduces the
    // product moments L(x_i^2)L(x_j^2); checked here rather than assumed.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double di = diag[static_cast<std::size_t>(i)], dj = diag[static_cast<std::size_t>(j)];
        double reproduced = di * di * dj * dj * gamma * sigma22;
        double truth = axis_x2(nm, i) * axis_x2(nm, j);
        if (std::abs(reproduced - truth) > 1e-12 * std::abs(truth))
          fail(errc::construction, "mixed fourth residual moment did not vanish");
      }
    }
    return res;
  }

  double l2 = nm.x2[0], l4 = nm.x4[0], l22 = nm.x2x2;
  double x2_res = l2 - c * std::sqrt(gamma * l22);
  double x4_res = l4 - 3.0 * l22;
  for (int i = 0; i < n; ++i) {
    res.x2[static_cast<std::size_t>(i)] = x2_res;
    res.x4[static_cast<std::size_t>(i)] = x4_res;
    res.x2_scale[static_cast<std::size_t>(i)] = l2;
    res.x4_scale[static_cast<std::size_t>(i)] = std::max(l4, 3.0 * l22);
  }
  double d = diag[0];
  double reproduced = d * d * d * d * gamma * sigma22;
  if (std::abs(reproduced - l22) > 1e-12 * std::abs(l22))
    fail(errc::construction, "mixed fourth residual moment did not vanish");
  return res;
}

ResidualRule solve_residual(const ResidualMoments& moments) {
  std::size_t n = moments.x2.size();
  ResidualRule rule;

  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    bool zero2 = std::abs(moments.x2[i]) <= kResidualZeroTol * moments.x2_scale[i];
    bool zero4 = std::abs(moments.x4[i]) <= kResidualZeroTol * moments.x4_scale[i];
    all_zero = all_zero && zero2 && zero4;
  }
  if (all_zero) {
    rule.center = moments.unit;
    return rule;
  }

  rule.has_axis_points = true;
  rule.node.resize(n);
  rule.weight.resize(n);
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(moments.x2[i] * moments.x4[i] > 0.0))
      fail(errc::construction,
           "residual moment problem unsolvable on axis " + std::to_string(i + 1) +
               ": L~(x^2)*L~(x^4) > 0 is violated (L~(x^2) = " + std::to_string(moments.x2[i]) +
               ", L~(x^4) = " + std::to_string(moments.x4[i]) + ")");
    rule.node[i] = std::sqrt(moments.x4[i] / moments.x2[i]);
    rule.weight[i] = moments.x2[i] * moments.x2[i] / (2.0 * moments.x4[i]);
    weight_sum += 2.0 * rule.weight[i];
  }
  rule.center = moments.unit - weight_sum;
  return rule;
}

CubatureRule build_product_rule(const MeasureSpec& measure,
                                std::optional<double> gamma_override) {
  if (!measure.is_product())
    fail(errc::invalid_argument, "product rule construction needs a product measure");
  double gamma = select_gamma(measure, gamma_override);
  ResidualRule residual = solve_residual(residual_moments(measure, gamma));
  return assemble(measure, gamma, residual, 5);
}

CubatureRule build_spherical_rule(const MeasureSpec& measure) {
  if (!measure.is_spherical())
    fail(errc::invalid_argument,
         "spherical rule construction needs a spherically symmetric measure");
  int n = measure.dimension;
  Normalized nm = normalized_moments(measure);
  double l2 = nm.x2[0], l4 = nm.x4[0], l22 = nm.x2x2;
  if (std::abs(l4 - 3.0 * l22) > 1e-9 * std::abs(l4))
    fail(errc::construction,
         "measure violates the spherical symmetry identity L(x1^4) = 3*L(x1^2*x2^2)");
  // gamma zeroing L~(x^2): (L(x1^2))^2/L(x1^2x2^2) * 2 Gamma(n/2+2) / (pi^{n/2} (n+2)^2).
  double inv_c = strict_sqrt_bound(n);
  double gamma = (l2 * l2 / l22) * inv_c * inv_c;
  ResidualRule residual = solve_residual(residual_moments(measure, gamma));
  if (residual.has_axis_points)
    fail(errc::construction, "spherical residual moments did not vanish");
  return assemble(measure, gamma, residual, 5);
}

CubatureRule build_degree3_rule(const MeasureSpec& measure) {
  if (!measure.is_product())
    fail(errc::invalid_argument, "degree-3 rule construction needs a product measure");
  int n = measure.dimension;
  AxisMoments first = moments::product_axis_moments(measure, 0);
  for (int i = 1; i < n; ++i) {
    AxisMoments am = moments::product_axis_moments(measure, i);
    if (std::abs(am.m2 - first.m2) > 1e-14 * first.m2 ||
        std::abs(am.m4 - first.m4) > 1e-14 * first.m4 ||
        std::abs(am.m6 - first.m6) > 1e-14 * std::max(first.m6, 1e-300))
      fail(errc::invalid_argument, "degree-3 rule needs identical axis weights");
  }
  // gamma = Gamma(n/2+1) / (pi^{n/2} (n+2)); L~(x^2) vanishes there.
  double gamma =
      std::exp(std::lgamma(0.5 * n + 1.0) - 0.5 * n * std::log(kPi)) / (n + 2.0);
  ResidualRule residual;
  residual.center = 1.0 - gamma * sphere_surface(n);
  return assemble(measure, gamma, residual, 3);
}

CubatureRule build_rule(const MeasureSpec& measure, std::optional<double> gamma_override) {
  if (measure.is_product()) return build_product_rule(measure, gamma_override);
  if (gamma_override)
    fail(errc::invalid_argument, "gamma override applies to product measures only");
  return build_spherical_rule(measure);
}

}  // namespace cub5::constructor
