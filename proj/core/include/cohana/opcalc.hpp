#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "cohana/functions.hpp"
#include "cohana/grids.hpp"
#include "cohana/groups.hpp"

namespace cohana::opcalc {

using cplx = std::complex<double>;

// Square complex matrix with a certified operator-norm upper bound:
// ||G^50||_F^{1/50} on the Gram matrix G = t* t dominates the spectral
// radius of G, hence bound >= ||t||_2. The Rayleigh residual of the final
// power vector is reported alongside.
struct CMatrix {
  Eigen::MatrixXcd mat;
  double norm_bound = 0.0;
  double bound_residual = 0.0;

  int dim() const { return static_cast<int>(mat.rows()); }
};

CMatrix make_cmatrix(Eigen::MatrixXcd m);

// Function on the unit circle: finite Laurent series or a rational function
// with certified pole locations (all strictly outside the closed disk for
// calculus inputs).
struct BoundaryFunction {
  fn::RationalFn f;
  std::vector<cplx> poles; // roots of the denominator
  double min_pole_abs = 0.0;

  cplx eval(cplx z) const { return f.eval(z); }
};

BoundaryFunction boundary_from_fourier(const std::map<int, cplx>& coeffs);
BoundaryFunction boundary_from_rational(fn::RationalFn f);
bool analytic_in_closed_disk(const BoundaryFunction& f);
// Taylor coefficients at 0; requires analyticity in a disk of radius > 1
std::vector<cplx> taylor_coefficients(const BoundaryFunction& f, int count);

// g . t = (conj(beta) t + conj(alpha))^{-1} (alpha t + beta), entries of
// g^{-1}; same composition convention as groups::mobius_disk.
CMatrix op_mobius(const groups::Su11& g, const CMatrix& t);

// Contour form of the covariant calculus: (1/N) sum f(z_j) z_j (z_j - t)^{-1},
// the trapezoid rule normalized so that the image of 1 is the identity.
Eigen::MatrixXcd riesz_dunford_contour(const BoundaryFunction& f, const CMatrix& t, int n_nodes = 512);

struct DiskCalcResult {
  Eigen::MatrixXcd value;        // truncated integral at rho
  Eigen::MatrixXcd value_outer;  // at rho' = (1 + rho)/2
  double drift = 0.0;            // ||value_outer - value||_F, divergence witness
  bool divergence_flag = false;
  Eigen::MatrixXcd regularized;  // per-mode finite part (see implementation note)
};

// Disk form 2 pi Int_{|a|<=rho} f(a) (1 - conj(a) t)^{-1} da / (1-|a|^2).
// Termwise divergent as rho -> 1; kept as a diagnostic. The regularized
// member divides each Taylor mode by the radial profile measured from the
// f == 1 run, calibrated against the contour form.
DiskCalcResult riesz_dunford_disk(const BoundaryFunction& f, const CMatrix& t, double rho,
                                  const grids::Grid& disk);

// || (conj(beta) t + conj(alpha))^{-1} Phi(f, g.t) - Phi(pi_g f, t) ||_F
double intertwine_residual(const BoundaryFunction& f, const groups::Su11& g, const CMatrix& t,
                           int n_nodes = 512);

// Reference value of f(t): eigendecomposition when well conditioned, else a
// certified power series.
Eigen::MatrixXcd spectral_oracle(const BoundaryFunction& f, const CMatrix& t);

// Scaled-and-squared Taylor sum with remainder below 1e-14.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a);

} // namespace cohana::opcalc
