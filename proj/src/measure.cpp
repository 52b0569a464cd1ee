#include "measure.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "error.hpp"

namespace cub5 {

namespace {

void require_dimension(int n) {
  if (n < 4) fail(errc::invalid_argument, "dimension must be at least 4, got " + std::to_string(n));
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(errc::parse, "invalid number '" + std::string(s) + "' in region string");
  return v;
}

std::vector<double> parse_double_list(std::string_view s) {
  std::vector<double> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.push_back(parse_double(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Splits "name(k1=v1;k2=v2)" into name and key/value pairs.
struct RegionParts {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
};

RegionParts split_region(const std::string& region) {
  RegionParts parts;
  auto open = region.find('(');
  if (open == std::string::npos) {
    parts.name = region;
    return parts;
  }
  if (region.back() != ')') fail(errc::parse, "malformed region string '" + region + "'");
  parts.name = region.substr(0, open);
  std::string_view body(region.data() + open + 1, region.size() - open - 2);
  while (!body.empty()) {
    auto semi = body.find(';');
    std::string_view item = body.substr(0, semi);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail(errc::parse, "malformed region parameter '" + std::string(item) + "'");
    parts.params.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (semi == std::string_view::npos) break;
    body.remove_prefix(semi + 1);
  }
  return parts;
}

}  // namespace

MeasureSpec MeasureSpec::cube(int n, std::vector<double> alpha) {
  require_dimension(n);
  if (!alpha.empty() && alpha.size() != 1 && static_cast<int>(alpha.size()) != n)
    fail(errc::invalid_argument, "alpha must hold one value or one per axis");
  for (double a : alpha)
    if (!(a > -1.0))
      fail(errc::invalid_argument, "Gegenbauer exponent must exceed -1, got " + fmt17(a));
  if (alpha.size() == 1 && n > 1) alpha.assign(static_cast<std::size_t>(n), alpha[0]);
  MeasureSpec m;
  m.kind = MeasureKind::product_cube;
  m.dimension = n;
  m.alpha = std::move(alpha);
  return m;
}

MeasureSpec MeasureSpec::gaussian(int n) {
  require_dimension(n);
  MeasureSpec m;
  m.kind = MeasureKind::gaussian_full_space;
  m.dimension = n;
  return m;
}

MeasureSpec MeasureSpec::ball(int n) {
  require_dimension(n);
  MeasureSpec m;
  m.kind = MeasureKind::unit_ball;
  m.dimension = n;
  return m;
}

MeasureSpec MeasureSpec::shell(int n, double inner_radius) {
  require_dimension(n);
  if (!(inner_radius >= 0.0 && inner_radius < 1.0))
    fail(errc::invalid_argument, "shell inner radius must lie in [0,1), got " + fmt17(inner_radius));
  MeasureSpec m;
  m.kind = MeasureKind::spherical_shell;
  m.dimension = n;
  m.shell_inner_radius = inner_radius;
  return m;
}

MeasureSpec MeasureSpec::exp_radial_weight(int n) {
  require_dimension(n);
  MeasureSpec m;
  m.kind = MeasureKind::exp_radial;
  m.dimension = n;
  return m;
}

MeasureSpec MeasureSpec::custom_product(int n, std::vector<AxisMoments> axes) {
  require_dimension(n);
  if (static_cast<int>(axes.size()) != n)
    fail(errc::invalid_argument, "custom product measure needs one moment set per axis");
  for (const auto& a : axes) {
    if (std::abs(a.m0 - 1.0) > 1e-14)
      fail(errc::invalid_argument, "custom axis moments must be normalized (m0 == 1)");
    if (!(a.m2 > 0.0) || !(a.m4 > 0.0) || !(a.m6 >= 0.0))
      fail(errc::invalid_argument, "custom axis moments must be positive");
  }
  MeasureSpec m;
  m.kind = MeasureKind::custom_product;
  m.dimension = n;
  m.custom_axes = std::move(axes);
  return m;
}

MeasureSpec MeasureSpec::custom_radial_measure(int n, RadialMoments moments) {
  require_dimension(n);
  if (!(moments.mass > 0.0) || !(moments.x2 > 0.0) || !(moments.x4 > 0.0) || !(moments.x2x2 > 0.0))
    fail(errc::invalid_argument, "custom radial moments must be positive");
  // A spherically symmetric functional must satisfy L(x1^4) = 3 L(x1^2 x2^2).
  if (std::abs(moments.x4 - 3.0 * moments.x2x2) > 1e-9 * std::abs(moments.x4))
    fail(errc::invalid_argument,
         "custom radial moments violate the spherical symmetry identity L(x1^4) = 3*L(x1^2*x2^2)");
  MeasureSpec m;
  m.kind = MeasureKind::custom_radial;
  m.dimension = n;
  m.custom = moments;
  return m;
}

bool MeasureSpec::contains(std::span<const double> point, double tol) const {
  switch (kind) {
    case MeasureKind::product_cube:
    case MeasureKind::custom_product: {
      for (double x : point)
        if (std::abs(x) > 1.0 + tol) return false;
      return true;
    }
    case MeasureKind::gaussian_full_space:
    case MeasureKind::exp_radial:
    case MeasureKind::custom_radial:
      return true;
    case MeasureKind::unit_ball:
    case MeasureKind::spherical_shell: {
      double r2 = 0.0;
      for (double x : point) r2 += x * x;
      double r = std::sqrt(r2);
      if (r > 1.0 + tol) return false;
      if (kind == MeasureKind::spherical_shell && r < shell_inner_radius - tol) return false;
      return true;
    }
  }
  return false;
}

std::string MeasureSpec::region_string() const {
  switch (kind) {
    case MeasureKind::product_cube: {
      if (alpha.empty()) return "cube";
      bool uniform = true;
      for (double a : alpha) uniform = uniform && a == alpha[0];
      std::string s = "cube(alpha=";
      if (uniform) {
        s += fmt17(alpha[0]);
      } else {
        for (std::size_t i = 0; i < alpha.size(); ++i) {
          if (i) s += ',';
          s += fmt17(alpha[i]);
        }
      }
      return s + ")";
    }
    case MeasureKind::gaussian_full_space:
      return "gaussian";
    case MeasureKind::unit_ball:
      return "ball";
    case MeasureKind::spherical_shell:
      return "shell(r=" + fmt17(shell_inner_radius) + ")";
    case MeasureKind::exp_radial:
      return "exp-radial";
    case MeasureKind::custom_product: {
      std::string m2, m4, m6;
      for (std::size_t i = 0; i < custom_axes.size(); ++i) {
        if (i) {
          m2 += ',';
          m4 += ',';
          m6 += ',';
        }
        m2 += fmt17(custom_axes[i].m2);
        m4 += fmt17(custom_axes[i].m4);
        m6 += fmt17(custom_axes[i].m6);
      }
      return "custom-product(m2=" + m2 + ";m4=" + m4 + ";m6=" + m6 + ")";
    }
    case MeasureKind::custom_radial:
      return "custom-radial(mass=" + fmt17(custom.mass) + ";m2=" + fmt17(custom.x2) +
             ";m4=" + fmt17(custom.x4) + ";m22=" + fmt17(custom.x2x2) + ")";
  }
  fail(errc::invalid_argument, "unknown measure kind");
}

MeasureSpec MeasureSpec::from_region_string(const std::string& region, int dimension) {
  RegionParts parts = split_region(region);
  auto param = [&](const std::string& key) -> std::string_view {
    for (const auto& [k, v] : parts.params)
      if (k == key) return v;
    fail(errc::parse, "region '" + parts.name + "' is missing parameter '" + key + "'");
  };
  if (parts.name == "cube") {
    if (parts.params.empty()) return cube(dimension);
    return cube(dimension, parse_double_list(param("alpha")));
  }
  if (parts.name == "gaussian") return gaussian(dimension);
  if (parts.name == "ball") return ball(dimension);
  if (parts.name == "shell") return shell(dimension, parse_double(param("r")));
  if (parts.name == "exp-radial") return exp_radial_weight(dimension);
  if (parts.name == "custom-product") {
    auto m2 = parse_double_list(param("m2"));
    auto m4 = parse_double_list(param("m4"));
    auto m6 = parse_double_list(param("m6"));
    if (m2.size() != m4.size() || m2.size() != m6.size())
      fail(errc::parse, "custom-product moment lists differ in length");
    std::vector<AxisMoments> axes(m2.size());
    for (std::size_t i = 0; i < m2.size(); ++i) axes[i] = {1.0, m2[i], m4[i], m6[i]};
    return custom_product(dimension, std::move(axes));
  }
  if (parts.name == "custom-radial") {
    RadialMoments rm;
    rm.mass = parse_double(param("mass"));
    rm.x2 = parse_double(param("m2"));
    rm.x4 = parse_double(param("m4"));
    rm.x2x2 = parse_double(param("m22"));
    return custom_radial_measure(dimension, rm);
  }
  fail(errc::parse, "unknown region '" + parts.name + "'");
}

}  // namespace cub5
