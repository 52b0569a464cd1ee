#pragma once

#include <array>

namespace cub5::verify {

/// Four-point 1-D quadrature, exact for polynomials of degree <= 7.
struct Quad1D {
  std::array<double, 4> node{};
  std::array<double, 4> weight{};
};

/// Gauss-Legendre on [-1,1], weight function 1 (weights sum to 2). Nodes are
/// the roots of P_4, found by Newton iteration to 1e-14.
Quad1D gauss_legendre4();

/// Gauss-Hermite on R, weight function e^{-x^2} (weights sum to sqrt(pi)).
/// Nodes are the roots of H_4, found the same way.
Quad1D gauss_hermite4();

}  // namespace cub5::verify
