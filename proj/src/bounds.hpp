#pragma once

namespace cub5::bounds {

/// dim P_n^k = C(n+k, n), the dimension of n-variate polynomials of degree <= k.
long long dim_poly_space(int n, int k);

/// Lower bound on the node count of a cubature formula of odd degree 2k+1 for
/// a centrally symmetric functional, evaluated exactly in integer/rational
/// arithmetic (the 2^{s-n} terms are kept as exact fractions and the result is
/// rounded up when fractional). Equals n^2+n+1 at degree 5.
long long moller_bound(int n, int degree);

/// The coarse form 2*dim P_n^k - (1 if k even else 0). Reported only in
/// verbose output; moller_bound is the authoritative value.
long long double_dim_bound(int n, int degree);

struct BoundReport {
  int dimension = 0;
  int degree = 0;
  long long dim_bound = 0;
  long long moller = 0;
  long long rule_points = 0;
  long long gap = 0;
};

BoundReport compare(int n, int degree, long long rule_points);

}  // namespace cub5::bounds
