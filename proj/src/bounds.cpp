#include "bounds.hpp"

#include <string>

#include "error.hpp"

namespace cub5::bounds {

namespace {

using u128 = unsigned __int128;

// Exact C(top, pick); zero when pick < 0 or pick > top. Arguments are small
// enough (top <= 90) that the product stays far below 128 bits.
u128 binomial(int top, int pick) {
  if (pick < 0 || pick > top) return 0;
  pick = std::min(pick, top - pick);
  u128 result = 1;
  for (int i = 1; i <= pick; ++i) {
    result *= static_cast<u128>(top - pick + i);
    result /= static_cast<u128>(i);
  }
  return result;
}

void require_range(int n, int degree) {
  if (n < 1 || n > 80)
    fail(errc::invalid_argument, "dimension must lie in [1, 80], got " + std::to_string(n));
  if (degree < 0 || degree > 9)
    fail(errc::invalid_argument, "degree must lie in [0, 9], got " + std::to_string(degree));
}

}  // namespace

long long dim_poly_space(int n, int k) {
  require_range(n, k);
  return static_cast<long long>(binomial(n + k, n));
}

long long moller_bound(int n, int degree) {
  require_range(n, degree);
  if (degree % 2 == 0)
    fail(errc::unsupported, "no sharpened lower bound for even degree " + std::to_string(degree));
  int k = (degree - 1) / 2;
  u128 pow2n = u128{1} << n;
  if (k % 2 == 1) {
    // N >= C(n+k,n) + sum_{s=1}^{n-1} 2^{s-n} C(s+k,s)
    u128 whole = binomial(n + k, n);
    u128 scaled = 0;  // sum of 2^s C(s+k,s)
    for (int s = 1; s <= n - 1; ++s) scaled += (u128{1} << s) * binomial(s + k, s);
    return static_cast<long long>(whole + (scaled + pow2n - 1) / pow2n);
  }
  // N >= C(n+k,n) + sum_{s=1}^{n-1} (1 - 2^{s-n}) C(s+k-1,s)
  u128 whole = binomial(n + k, n);
  u128 scaled = 0;
  for (int s = 1; s <= n - 1; ++s) {
    whole += binomial(s + k - 1, s);
    scaled += (u128{1} << s) * binomial(s + k - 1, s);
  }
  return static_cast<long long>(whole - scaled / pow2n);
}

long long double_dim_bound(int n, int degree) {
  require_range(n, degree);
  if (degree % 2 == 0)
    fail(errc::unsupported, "no sharpened lower bound for even degree " + std::to_string(degree));
  int k = (degree - 1) / 2;
  return 2 * dim_poly_space(n, k) - (k % 2 == 0 ? 1 : 0);
}

BoundReport compare(int n, int degree, long long rule_points) {
  BoundReport report;
  report.dimension = n;
  report.degree = degree;
  report.dim_bound = dim_poly_space(n, (degree % 2 == 0 ? degree : degree - 1) / 2);
  report.moller = moller_bound(n, degree);
  report.rule_points = rule_points;
  report.gap = rule_points - report.moller;
  return report;
}

}  // namespace cub5::bounds
