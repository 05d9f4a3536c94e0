#include "cohana/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"

namespace cohana {

Rule1D gauss_legendre(int n) {
  if (n < 1) throw error(errc::invalid_input, "gauss_legendre: n must be >= 1");
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = std::numbers::pi;
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double x = std::cos(pi * (i - 0.25) / (n + 0.5));
    double x_prev = 2.0, dp = 0.0;
    while (std::abs(x - x_prev) > 1e-15) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * x * p2 - (j - 1) * p3) / j;
      }
      dp = n * (x * p1 - p2) / (x * x - 1.0);
      x_prev = x;
      x = x_prev - p1 / dp;
    }
    rule.nodes[i - 1] = -x;
    rule.nodes[n - i] = x;
    rule.weights[i - 1] = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[n - i] = rule.weights[i - 1];
  }
  return rule;
}

Rule1D gauss_legendre(int n, double a, double b) {
  Rule1D base = gauss_legendre(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
  for (int i = 0; i < n; ++i) {
    base.nodes[i] = mid + half * base.nodes[i];
    base.weights[i] *= half;
  }
  return base;
}

Rule1D gauss_hermite(int n) {
  if (n < 1) throw error(errc::invalid_input, "gauss_hermite: n must be >= 1");
  // Nodes: eigenvalues of the Jacobi matrix (off-diagonal sqrt(k/2)).
  // Weights: w_j = e^{-x^2} / (n * psi_{n-1}(x_j)^2) with psi the orthonormal
  // Hermite function; the eigenvector route loses the far-tail weights in
  // double precision, this form stays accurate after the Gaussian is absorbed.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = std::sqrt(k / 2.0);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    rule.nodes[i] = x;
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    for (int k = 0; k + 1 < n; ++k) {
      double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    rule.weights[i] = std::exp(-x * x) / (n * cur * cur);
  }
  return rule;
}

} // namespace cohana
