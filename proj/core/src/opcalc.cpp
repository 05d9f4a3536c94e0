#include "cohana/opcalc.hpp"

#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"
#include "cohana/quadrature.hpp"

namespace cohana::opcalc {

namespace {
const double pi = std::numbers::pi;
constexpr double kNormGate = 0.95;

void require_contraction(const CMatrix& t, const char* who) {
  if (t.norm_bound > kNormGate)
    throw error(errc::norm_violation,
                std::string(who) + ": certified norm bound exceeds 0.95");
}
} // namespace

CMatrix make_cmatrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols()) throw error(errc::dimension_mismatch, "CMatrix: matrix must be square");
  CMatrix out;
  out.mat = std::move(m);
  const int d = out.dim();
  Eigen::MatrixXcd gram = out.mat.adjoint() * out.mat;
  // ||G^k||_F^{1/k} >= rho(G) = ||t||^2 for every k; 50 steps with rescaling
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(d, d);
  double log_scale = 0.0;
  const int steps = 50;
  for (int k = 0; k < steps; ++k) {
    power = gram * power;
    double s = power.norm();
    if (s == 0.0) {
      out.norm_bound = 0.0;
      out.bound_residual = 0.0;
      return out;
    }
    power /= s;
    log_scale += std::log(s);
  }
  out.norm_bound = std::sqrt(std::exp(log_scale / steps));
  // Rayleigh residual of the implicit power vector (first column)
  Eigen::VectorXcd v = power.col(0);
  if (v.norm() > 0) {
    v.normalize();
    cplx rho = v.dot(gram * v);
    out.bound_residual = (gram * v - rho * v).norm();
  }
  return out;
}

BoundaryFunction boundary_from_fourier(const std::map<int, cplx>& coeffs) {
  // Laurent series sum c_k z^k as a rational function z^{-K} * polynomial
  int min_k = 0;
  for (const auto& [k, v] : coeffs) min_k = std::min(min_k, k);
  int shift = -min_k;
  std::vector<cplx> num(1, cplx{0.0, 0.0});
  for (const auto& [k, v] : coeffs) {
    int idx = k + shift;
    if (idx >= static_cast<int>(num.size())) num.resize(idx + 1, cplx{0.0, 0.0});
    num[idx] += v;
  }
  BoundaryFunction out;
  out.f = fn::RationalFn(fn::Polynomial(std::move(num)),
                         fn::Polynomial::monomial(shift));
  out.poles.assign(shift > 0 ? 1 : 0, cplx{0.0, 0.0});
  out.min_pole_abs = shift > 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return out;
}

BoundaryFunction boundary_from_rational(fn::RationalFn f) {
  BoundaryFunction out;
  out.f = std::move(f);
  const auto& den = out.f.den.c;
  int deg = static_cast<int>(den.size()) - 1;
  while (deg > 0 && std::abs(den[deg]) == 0.0) --deg;
  if (deg == 0) {
    out.min_pole_abs = std::numeric_limits<double>::infinity();
    return out;
  }
  // companion-matrix roots of the denominator
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -den[i] / den[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  out.min_pole_abs = std::numeric_limits<double>::infinity();
  for (int i = 0; i < deg; ++i) {
    cplx root = es.eigenvalues()(i);
    out.poles.push_back(root);
    out.min_pole_abs = std::min(out.min_pole_abs, std::abs(root));
  }
  return out;
}

bool analytic_in_closed_disk(const BoundaryFunction& f) { return f.min_pole_abs > 1.0 + 1e-12; }

std::vector<cplx> taylor_coefficients(const BoundaryFunction& f, int count) {
  if (!analytic_in_closed_disk(f))
    throw error(errc::pole, "taylor_coefficients: poles inside the closed disk");
  // linear recurrence from num = den * series
  const auto& num = f.f.num.c;
  const auto& den = f.f.den.c;
  if (std::abs(den[0]) < 1e-300)
    throw error(errc::pole, "taylor_coefficients: denominator vanishes at 0");
  std::vector<cplx> s(count, cplx{0.0, 0.0});
  for (int k = 0; k < count; ++k) {
    cplx acc = k < static_cast<int>(num.size()) ? num[k] : cplx{0.0, 0.0};
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) acc -= den[j] * s[k - j];
    s[k] = acc / den[0];
  }
  return s;
}

CMatrix op_mobius(const groups::Su11& g, const CMatrix& t) {
  if (t.norm_bound >= 1.0)
    throw error(errc::norm_violation, "op_mobius: ||t|| must be < 1");
  groups::ActionEntries e = groups::su11_action_entries(g);
  const int d = t.dim();
  Eigen::MatrixXcd den = std::conj(e.beta) * t.mat + std::conj(e.alpha) * Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd num = e.alpha * t.mat + e.beta * Eigen::MatrixXcd::Identity(d, d);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(den);
  if (!lu.isInvertible())
    throw error(errc::numerical, "op_mobius: singular denominator");
  double cond = den.norm() * lu.inverse().norm();
  if (cond > 1e12) throw error(errc::numerical, "op_mobius: solve too ill-conditioned");
  return make_cmatrix(lu.solve(num));
}

Eigen::MatrixXcd riesz_dunford_contour(const BoundaryFunction& f, const CMatrix& t, int n_nodes) {
  if (n_nodes < 16) throw error(errc::invalid_input, "riesz_dunford_contour: N must be >= 16");
  require_contraction(t, "riesz_dunford_contour");
  if (f.min_pole_abs <= 1.0 + 1e-12)
    throw error(errc::pole, "riesz_dunford_contour: f has poles on or inside the contour");
  const int d = t.dim();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
  for (int j = 0; j < n_nodes; ++j) {
    cplx z = std::polar(1.0, 2.0 * pi * j / n_nodes);
    Eigen::MatrixXcd resolvent = (z * eye - t.mat).partialPivLu().solve(eye);
    acc += f.eval(z) * z * resolvent;
  }
  return acc / static_cast<double>(n_nodes);
}

namespace {

// 2 pi Int f(a) (1 - conj(a) t)^{-1} da / (1-|a|^2) over |a| <= rho
Eigen::MatrixXcd disk_integral(const BoundaryFunction& f, const CMatrix& t, double rho, int nr,
                               int ntheta) {
  const int d = t.dim();
  Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  Rule1D radial = gauss_legendre(nr, 0.0, rho);
  const double dtheta = 2.0 * pi / ntheta;
  for (int j = 0; j < nr; ++j) {
    double r = radial.nodes[j];
    double wr = radial.weights[j] * r / (1.0 - r * r) * dtheta;
    for (int l = 0; l < ntheta; ++l) {
      cplx a = std::polar(r, dtheta * l);
      Eigen::MatrixXcd resolvent = (eye - std::conj(a) * t.mat).partialPivLu().solve(eye);
      acc += wr * f.eval(a) * resolvent;
    }
  }
  return 2.0 * pi * acc;
}

double radial_log_profile(double rho, int nr, int k) {
  // J_k(rho) = Int_0^rho r^{2k+1} / (1 - r^2) dr with the same radial rule
  Rule1D radial = gauss_legendre(nr, 0.0, rho);
  double acc = 0.0;
  for (int j = 0; j < nr; ++j) {
    double r = radial.nodes[j];
    acc += radial.weights[j] * std::pow(r, 2 * k + 1) / (1.0 - r * r);
  }
  return acc;
}

} // namespace

DiskCalcResult riesz_dunford_disk(const BoundaryFunction& f, const CMatrix& t, double rho,
                                  const grids::Grid& disk) {
  if (disk.domain != grids::Domain::disk)
    throw error(errc::invalid_input, "riesz_dunford_disk: a disk grid is required");
  if (rho <= 0.0 || rho >= 1.0)
    throw error(errc::invalid_input, "riesz_dunford_disk: rho must lie in (0,1)");
  require_contraction(t, "riesz_dunford_disk");
  const int nr = disk.n1, ntheta = disk.n2;
  DiskCalcResult out;
  out.value = disk_integral(f, t, rho, nr, ntheta);
  double rho2 = 0.5 * (1.0 + rho);
  out.value_outer = disk_integral(f, t, rho2, nr, ntheta);
  out.drift = (out.value_outer - out.value).norm();
  out.divergence_flag = out.drift > 1e-10;

  // Per-mode finite part: the f == 1 run fixes the divergent radial profile
  // J_0(rho); mode k carries the same profile shifted by a convergent tail,
  // so dividing each Taylor mode by 4 pi^2 J_k(rho) recovers the calculus.
  const int d = t.dim();
  out.regularized = Eigen::MatrixXcd::Zero(d, d);
  if (analytic_in_closed_disk(f)) {
    int count = 48;
    std::vector<cplx> coeff = taylor_coefficients(f, count);
    for (int k = 0; k < count; ++k) {
      if (std::abs(coeff[k]) > 1e-16) {
        std::map<int, cplx> mono;
        mono[k] = 1.0;
        Eigen::MatrixXcd mode = disk_integral(boundary_from_fourier(mono), t, rho, nr, ntheta);
        out.regularized += coeff[k] * mode / (4.0 * pi * pi * radial_log_profile(rho, nr, k));
      }
    }
  }
  return out;
}

double intertwine_residual(const BoundaryFunction& f, const groups::Su11& g, const CMatrix& t,
                           int n_nodes) {
  groups::ActionEntries e = groups::su11_action_entries(g);
  CMatrix gt = op_mobius(g, t);
  const int d = t.dim();
  Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd mult_den = std::conj(e.beta) * t.mat + std::conj(e.alpha) * eye;
  Eigen::MatrixXcd lhs = mult_den.partialPivLu().solve(riesz_dunford_contour(f, gt, n_nodes));

  // pi_g f = (conj(beta) z + conj(alpha))^{-1} f((alpha z + beta)/(...))
  fn::RationalFn moved =
      fn::compose_mobius(f.f, e.alpha, e.beta, std::conj(e.beta), std::conj(e.alpha));
  fn::RationalFn mult(fn::Polynomial::constant(1.0),
                      fn::Polynomial(std::vector<cplx>{std::conj(e.alpha), std::conj(e.beta)}));
  BoundaryFunction pig_f = boundary_from_rational(mult * moved);
  Eigen::MatrixXcd rhs = riesz_dunford_contour(pig_f, t, n_nodes);
  return (lhs - rhs).norm();
}

Eigen::MatrixXcd spectral_oracle(const BoundaryFunction& f, const CMatrix& t) {
  require_contraction(t, "spectral_oracle");
  if (!analytic_in_closed_disk(f))
    throw error(errc::pole, "spectral_oracle: f must be analytic on the closed disk");
  const int d = t.dim();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(t.mat);
  if (es.info() == Eigen::Success) {
    Eigen::MatrixXcd v = es.eigenvectors();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
    if (lu.isInvertible() && v.norm() * lu.inverse().norm() < 1e8) {
      Eigen::VectorXcd fd(d);
      for (int i = 0; i < d; ++i) fd(i) = f.eval(es.eigenvalues()(i));
      return v * fd.asDiagonal() * lu.inverse();
    }
  }
  // defective fallback: certified power series
  double radius = std::min(1.0 + 0.5 * (f.min_pole_abs - 1.0), 2.0);
  double bound = 0.0;
  for (int j = 0; j < 64; ++j)
    bound = std::max(bound, std::abs(f.eval(std::polar(radius, 2.0 * pi * j / 64))));
  double ratio = t.norm_bound / radius;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd tk = Eigen::MatrixXcd::Identity(d, d);
  int count = 8;
  while (bound * std::pow(ratio, count) / (1.0 - ratio) > 1e-15 && count < 4096) ++count;
  std::vector<cplx> coeff = taylor_coefficients(f, count);
  for (int k = 0; k < count; ++k) {
    acc += coeff[k] * tk;
    tk = tk * t.mat;
  }
  return acc;
}

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a) {
  const int d = static_cast<int>(a.rows());
  if (a.cols() != d) throw error(errc::dimension_mismatch, "matrix_exp: square matrix required");
  double norm = a.norm();
  int s = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++s;
  }
  Eigen::MatrixXcd b = a / std::pow(2.0, s);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd sum = term;
  double bnorm = b.norm();
  for (int k = 1; k <= 64; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
    double tail = term.norm() * bnorm / std::max(1e-30, (k + 2.0 - bnorm));
    if (tail < 1e-16) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

} // namespace cohana::opcalc
