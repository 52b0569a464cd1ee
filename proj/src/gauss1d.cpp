#include "gauss1d.hpp"

#include <cmath>
#include <utility>

#include "error.hpp"
#include "special.hpp"

namespace cub5::verify {

namespace {

// Value and derivative of the Legendre polynomial P_m by the three-term
// recurrence; the derivative uses (1-x^2) P_m' = m (P_{m-1} - x P_m).
std::pair<double, double> legendre(int m, double x) {
  double prev = 1.0, curr = x;
  for (int k = 2; k <= m; ++k) {
    double next = ((2.0 * k - 1.0) * x * curr - (k - 1.0) * prev) / k;
    prev = curr;
    curr = next;
  }
  double deriv = m * (prev - x * curr) / (1.0 - x * x);
  return {curr, deriv};
}

// Physicists' Hermite polynomial H_m and derivative H_m' = 2m H_{m-1}.
std::pair<double, double> hermite(int m, double x) {
  double prev = 1.0, curr = 2.0 * x;
  for (int k = 2; k <= m; ++k) {
    double next = 2.0 * x * curr - 2.0 * (k - 1.0) * prev;
    prev = curr;
    curr = next;
  }
  return {curr, 2.0 * m * prev};
}

template <typename Eval>
double newton_root(Eval eval, double guess) {
  double x = guess;
  for (int iter = 0; iter < 100; ++iter) {
    auto [value, deriv] = eval(x);
    double step = value / deriv;
    x -= step;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) return x;
  }
  fail(errc::construction, "orthogonal polynomial root iteration did not converge");
}

}  // namespace

Quad1D gauss_legendre4() {
  Quad1D q;
  constexpr int m = 4;
  for (int i = 0; i < m; ++i) {
    // Standard Chebyshev-based initial guesses, one per root, largest first.
    double guess = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double x = newton_root([](double t) { return legendre(m, t); }, guess);
    auto [value, deriv] = legendre(m, x);
    (void)value;
    // Iterating i ascending walks the roots in descending order.
    q.node[static_cast<std::size_t>(m - 1 - i)] = x;
    q.weight[static_cast<std::size_t>(m - 1 - i)] = 2.0 / ((1.0 - x * x) * deriv * deriv);
  }
  return q;
}

Quad1D gauss_hermite4() {
  Quad1D q;
  constexpr int m = 4;
  // The two positive roots of H_4 are near 0.74 and 2.33; seed each side.
  const double guesses[m] = {-2.3, -0.7, 0.7, 2.3};
  double norm = 8.0 * 24.0 * std::sqrt(kPi);  // 2^{m-1} m! sqrt(pi)
  for (int i = 0; i < m; ++i) {
    double x = newton_root([](double t) { return hermite(m, t); }, guesses[i]);
    auto [h3, unused] = hermite(m - 1, x);
    (void)unused;
    q.node[static_cast<std::size_t>(i)] = x;
    q.weight[static_cast<std::size_t>(i)] = norm / (m * m * h3 * h3);
  }
  return q;
}

}  // namespace cub5::verify
