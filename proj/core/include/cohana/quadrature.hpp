#pragma once

#include <vector>

namespace cohana {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1].
Rule1D gauss_legendre(int n);

// Gauss-Legendre mapped to [a, b].
Rule1D gauss_legendre(int n, double a, double b);

// Gauss-Hermite for weight exp(-x^2) on R (Golub-Welsch).
Rule1D gauss_hermite(int n);

} // namespace cohana
