#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "cohana/grids.hpp"
#include "cohana/opcalc.hpp"

namespace cohana::opcalc {

// Commutative polynomial in k real variables.
struct CommutativePoly {
  int k = 1;
  std::map<std::vector<int>, cplx> terms; // multi-index -> coefficient

  static CommutativePoly monomial(int k, const std::vector<int>& alpha, cplx v = 1.0);
};

// amp * P(x) * exp(-1/2 x^T A x + b.x) with SPD A. The Fourier transform is
// closed form; polynomial factors are supported for diagonal A.
struct WeylFunction {
  int k = 1;
  Eigen::MatrixXd quad;  // A
  Eigen::VectorXd shift; // b
  cplx amp{1.0, 0.0};
  std::map<std::vector<int>, cplx> poly; // empty -> pure Gaussian

  double eval(const Eigen::VectorXd& x) const = delete; // use eval_at
  cplx eval_at(const Eigen::VectorXd& x) const;
  cplx fourier(const Eigen::VectorXd& xi) const; // f(x) = Int e^{i x.xi} fourier(xi) dxi
};

WeylFunction weyl_gaussian(Eigen::MatrixXd a, Eigen::VectorXd b, cplx amp = 1.0);
WeylFunction weyl_gaussian_poly(Eigen::MatrixXd a_diag, Eigen::VectorXd b,
                                std::map<std::vector<int>, cplx> poly, cplx amp = 1.0);

// Full symmetrization: each monomial maps to the average over all orderings
// of its letter word.
Eigen::MatrixXcd weyl_poly(const CommutativePoly& p, const std::vector<CMatrix>& T);

// Fourier-synthesis form: Int exp(i sum xi_j T_j) fourier(xi) dxi on a
// Gauss-Hermite rule sized by the grid (line for k = 1, plane for k = 2).
Eigen::MatrixXcd weyl_integral(const WeylFunction& f, const std::vector<CMatrix>& T,
                               const grids::Grid& xi_grid);

} // namespace cohana::opcalc
