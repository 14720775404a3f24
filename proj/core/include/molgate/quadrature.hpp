#pragma once

#include <vector>

namespace molgate {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n);

}  // namespace molgate
