#include "cohana/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"
#include "cohana/quadrature.hpp"

namespace cohana::opcalc {

namespace {
const double pi = std::numbers::pi;

void require_hermitian_tuple(const std::vector<CMatrix>& T, int k, const char* who) {
  if (static_cast<int>(T.size()) != k)
    throw error(errc::dimension_mismatch, std::string(who) + ": tuple size mismatch");
  const int d = T.front().dim();
  for (const auto& t : T) {
    if (t.dim() != d)
      throw error(errc::dimension_mismatch, std::string(who) + ": matrix dimensions differ");
    if ((t.mat - t.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw error(errc::invalid_input, std::string(who) + ": matrices must be Hermitian");
  }
}
} // namespace

CommutativePoly CommutativePoly::monomial(int k, const std::vector<int>& alpha, cplx v) {
  CommutativePoly p;
  p.k = k;
  if (static_cast<int>(alpha.size()) != k)
    throw error(errc::dimension_mismatch, "CommutativePoly: multi-index length mismatch");
  p.terms[alpha] = v;
  return p;
}

cplx WeylFunction::eval_at(const Eigen::VectorXd& x) const {
  double quad_part = -0.5 * x.dot(quad * x) + shift.dot(x);
  cplx poly_part{1.0, 0.0};
  if (!poly.empty()) {
    poly_part = 0.0;
    for (const auto& [alpha, v] : poly) {
      double mono = 1.0;
      for (int j = 0; j < k; ++j) mono *= std::pow(x(j), alpha[j]);
      poly_part += v * mono;
    }
  }
  return amp * poly_part * std::exp(quad_part);
}

namespace {

// Fourier transform (f(x) = Int e^{i x.xi} fhat(xi) dxi convention) of
// x^n e^{-a x^2 / 2 + b x} in one variable, evaluated at xi.
cplx fourier_1d(int n, double a, double b, double xi) {
  // base: (2 pi)^{-1} Int e^{-a x^2/2 + (b - i xi) x} dx
  cplx s = cplx(b, -xi);
  cplx u = s / a;
  cplx g = std::pow(2.0 * pi, -0.5) * std::pow(a, -0.5) * std::exp(0.5 * s * s / a);
  if (n == 0) return g;
  // d/db recursion: P_{n+1}(u) = P_n'(u)/a + u P_n(u)
  std::vector<cplx> p{1.0};
  for (int step = 0; step < n; ++step) {
    std::vector<cplx> next(p.size() + 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      if (i + 1 < p.size()) next[i] += (static_cast<double>(i + 1) * p[i + 1]) / a;
    }
    p = std::move(next);
  }
  cplx acc{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u + *it;
  return acc * g;
}

} // namespace

cplx WeylFunction::fourier(const Eigen::VectorXd& xi) const {
  if (poly.empty()) {
    Eigen::LLT<Eigen::MatrixXd> llt(quad);
    if (llt.info() != Eigen::Success)
      throw error(errc::invalid_input, "WeylFunction: quadratic form must be SPD");
    Eigen::MatrixXd ainv = llt.solve(Eigen::MatrixXd::Identity(k, k));
    Eigen::VectorXcd s(k);
    for (int j = 0; j < k; ++j) s(j) = cplx(shift(j), -xi(j));
    cplx expo = 0.5 * (s.transpose() * ainv.cast<cplx>() * s)(0);
    double det = 1.0;
    Eigen::MatrixXd l = llt.matrixL();
    for (int j = 0; j < k; ++j) det *= l(j, j) * l(j, j);
    return amp * std::pow(2.0 * pi, -0.5 * k) / std::sqrt(det) * std::exp(expo);
  }
  // polynomial factor: diagonal quadratic form, tensor recursion
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && std::abs(quad(i, j)) > 0.0)
        throw error(errc::not_supported,
                    "WeylFunction: polynomial factors need a diagonal quadratic form");
  cplx acc{0.0, 0.0};
  for (const auto& [alpha, v] : poly) {
    cplx prod{1.0, 0.0};
    for (int j = 0; j < k; ++j) prod *= fourier_1d(alpha[j], quad(j, j), shift(j), xi(j));
    acc += v * prod;
  }
  return amp * acc;
}

WeylFunction weyl_gaussian(Eigen::MatrixXd a, Eigen::VectorXd b, cplx amp) {
  WeylFunction f;
  f.k = static_cast<int>(a.rows());
  f.quad = std::move(a);
  f.shift = std::move(b);
  f.amp = amp;
  return f;
}

WeylFunction weyl_gaussian_poly(Eigen::MatrixXd a_diag, Eigen::VectorXd b,
                                std::map<std::vector<int>, cplx> poly, cplx amp) {
  WeylFunction f = weyl_gaussian(std::move(a_diag), std::move(b), amp);
  f.poly = std::move(poly);
  return f;
}

Eigen::MatrixXcd weyl_poly(const CommutativePoly& p, const std::vector<CMatrix>& T) {
  require_hermitian_tuple(T, p.k, "weyl_poly");
  const int d = T.front().dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [alpha, v] : p.terms) {
    std::vector<int> letters;
    for (int j = 0; j < p.k; ++j)
      for (int c = 0; c < alpha[j]; ++c) letters.push_back(j);
    if (letters.empty()) {
      out += v * Eigen::MatrixXcd::Identity(d, d);
      continue;
    }
    std::sort(letters.begin(), letters.end());
    Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
    long count = 0;
    do {
      Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(d, d);
      for (int idx : letters) prod = prod * T[idx].mat;
      sym += prod;
      ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    out += v * sym / static_cast<double>(count);
  }
  return out;
}

Eigen::MatrixXcd weyl_integral(const WeylFunction& f, const std::vector<CMatrix>& T,
                               const grids::Grid& xi_grid) {
  require_hermitian_tuple(T, f.k, "weyl_integral");
  const int d = T.front().dim();
  const int n1d = xi_grid.n1;
  if ((f.k >= 2 && xi_grid.domain != grids::Domain::plane) ||
      (f.k == 1 && xi_grid.domain == grids::Domain::disk))
    throw error(errc::invalid_input, "weyl_integral: grid domain does not fit the variable count");
  if (f.k > 2) throw error(errc::not_supported, "weyl_integral: k <= 2 supported");

  // scale per eigen-axis of A so the Gauss-Hermite weight matches |fourier|
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f.quad);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw error(errc::invalid_input, "weyl_integral: quadratic form must be SPD");
  Eigen::MatrixXd map = es.eigenvectors() *
                        es.eigenvalues().cwiseSqrt().asDiagonal() * std::sqrt(2.0);
  double jac = std::abs(map.determinant());

  Rule1D gh = gauss_hermite(n1d);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  auto accumulate = [&](const Eigen::VectorXd& u, double w) {
    Eigen::VectorXd xi = map * u;
    cplx fh = f.fourier(xi);
    double gauss = std::exp(u.squaredNorm());
    Eigen::MatrixXcd phase = Eigen::MatrixXcd::Zero(d, d);
    for (int j = 0; j < f.k; ++j) phase += cplx(0.0, xi(j)) * T[j].mat;
    acc += (w * gauss) * fh * matrix_exp(phase);
  };
  if (f.k == 1) {
    Eigen::VectorXd u(1);
    for (int i = 0; i < n1d; ++i) {
      u(0) = gh.nodes[i];
      accumulate(u, gh.weights[i]);
    }
  } else {
    Eigen::VectorXd u(2);
    for (int i = 0; i < n1d; ++i)
      for (int j = 0; j < n1d; ++j) {
        u(0) = gh.nodes[i];
        u(1) = gh.nodes[j];
        accumulate(u, gh.weights[i] * gh.weights[j]);
      }
  }
  acc *= jac;

  // tail check: the transform must be negligible at the rule's edge
  Eigen::VectorXd edge = Eigen::VectorXd::Constant(f.k, gh.nodes.back());
  double center = std::abs(f.fourier(Eigen::VectorXd::Zero(f.k)));
  if (std::abs(f.fourier(map * edge)) > 1e-10 * (center + 1e-300))
    throw error(errc::numerical, "weyl_integral: quadrature domain too small (tail bound)");
  return acc;
}

} // namespace cohana::opcalc
