#pragma once

#include <string>
#include <vector>

#include "cohana/functions.hpp"
#include "cohana/grids.hpp"
#include "cohana/reps.hpp"

namespace cohana::cstrans {

using cplx = std::complex<double>;
using reps::GroupElement;

enum class TheoryKind { hardy, bergman, segal_bargmann };

// A function theory: representation, vacuum, homogeneous-space grid, and the
// calibration data that makes monomial reproduction exact on the grid
// (per-mode Gram normalizers; their pointwise limit is the radial factor
// c(a) = (1-|a|^2)^{-m/2} / mass).
struct Theory {
  TheoryKind kind;
  int m = 2; // Bergman weight
  reps::Representation rep;
  grids::GridPtr x_grid;
  grids::GridPtr omega_grid;
  grids::SampledFunction vacuum; // on x_grid
  double vac_norm2 = 1.0;        // <f0, f0> on x_grid

  int n_modes = 0;               // mode resolution of the transforms
  std::vector<double> hx;        // <w^k, w^k> on the X grid (Hardy: 1)
  std::vector<double> homega;    // <a^k, a^k> on the Omega grid measure
  std::vector<double> coh_coeff; // coherent-state expansion coefficients

  std::string name() const;
};

Theory make_hardy(int n_circle = 256, int nr = 48, int ntheta = 256, double omega_rmax = 0.9);
Theory make_bergman(int m, int nr = 64, int ntheta = 256, double r_max = 1.0);
Theory make_segal_bargmann(int n_line = 128, int n_plane = 64);

// Full wavelet transform at one group element: <f, pi_g f0>.
cplx wavelet_full(const Theory& th, const grids::SampledFunction& f, const GroupElement& g);

// Reduced transform C: f |-> <f, pi_{s(a)} f0> on the Omega grid. The result
// carries an evaluator valid at any point of Omega.
grids::SampledFunction reduced_transform(const Theory& th, const grids::SampledFunction& f);

// Calibrated analytic extension: Hardy e^{i n phi} -> a^n, Bergman w^n -> a^n,
// Segal-Bargmann: the transform itself (the embedding is already isometric).
fn::GenericFn analytic_extension(const Theory& th, const grids::SampledFunction& f);

// Inverse F: fhat |-> integral of fhat(a) f_{s(a)} da. For Hardy the integral
// is divergent; regularized = true requests the limiting-procedure form
// (truncation to nonnegative Fourier modes).
grids::SampledFunction inverse_transform(const Theory& th, const grids::SampledFunction& fhat,
                                         bool regularized = false);

// Orthogonal projection of L2(X) onto the theory's model subspace.
grids::SampledFunction project(const Theory& th, const grids::SampledFunction& f);

// Reduced projection on Omega, kernel f0hat(s^{-1}(a^{-1} a')) conj(chi)(r(...)).
grids::SampledFunction reduced_projection(const Theory& th, const grids::SampledFunction& w);

// Closed-form reproducing kernels (Szego / weighted Bergman / scaled
// Segal-Bargmann exp(-|z|^2 + w conj(z))).
cplx kernel(const Theory& th, cplx z, cplx w);

// Kernel of reduced_projection, K(z -> w); conjugate-symmetric.
cplx projection_kernel(const Theory& th, cplx z, cplx w);

struct CoeffVector {
  TheoryKind theory;
  int m = 0;
  std::vector<cplx> coeffs;
  double truncation_error = 0.0;
};

CoeffVector taylor_coeffs(const Theory& th, const grids::SampledFunction& f, int K);
// sum_alpha conj(V_alpha)(a) f_alpha — partial sum of the coherent-state series
cplx taylor_partial_sum(const Theory& th, const CoeffVector& coeffs, cplx a);

struct CrResidual {
  double residual = 0.0;       // sup-norm of the annihilator over the sample set
  double step = 0.0;           // finite-difference step
  double error_estimate = 0.0; // Richardson O(h^2) estimate
};

// Annihilating operator residual: (d/dz̄ + z/2) for Segal-Bargmann on fhat,
// d/d(conj a) on the calibrated extension for Hardy/Bergman.
CrResidual cr_residual(const Theory& th, const grids::SampledFunction& fhat, double h = 1e-3);

// [rho_g fhat](a) = fhat(s^{-1}(g^{-1} s(a))) conj(chi)(r(g^{-1} s(a))).
// This is the orientation intertwined by C: rho C = C pi.
grids::SampledFunction apply_rho(const Theory& th, const GroupElement& g,
                                 const grids::SampledFunction& fhat);

} // namespace cohana::cstrans
