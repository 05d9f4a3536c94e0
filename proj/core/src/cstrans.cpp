#include "cohana/cstrans.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "cohana/errors.hpp"

namespace cohana::cstrans {

using fn::GaussHermiteFn;
using fn::GenericFn;
using fn::Polynomial;
using fn::RationalFn;
using grids::SampledFunction;
using groups::Heis;
using groups::Su11;

namespace {

const double pi = std::numbers::pi;

const Su11& expect_su11(const GroupElement& g, const char* who) {
  if (const auto* s = std::get_if<Su11>(&g)) return *s;
  throw error(errc::invalid_input, std::string(who) + ": SU(1,1) element expected");
}

const Heis& expect_heis(const GroupElement& g, const char* who) {
  if (const auto* h = std::get_if<Heis>(&g)) return *h;
  throw error(errc::invalid_input, std::string(who) + ": Heisenberg element expected");
}

double disk_prefactor(const Theory& th, double r2) {
  // radial factor of the coherent state <., pi_{s(a)} f0>
  return th.kind == TheoryKind::hardy ? std::sqrt(1.0 - r2)
                                      : std::pow(1.0 - r2, 0.5 * th.m);
}

// <f, node^k> moments on a circle or disk grid, k < K
std::vector<cplx> basis_moments(const grids::Grid& grid, const std::vector<cplx>& values, int K) {
  std::vector<cplx> mom(K, cplx{0.0, 0.0});
  for (std::size_t n = 0; n < grid.size(); ++n) {
    cplx base = std::conj(grid.nodes[n]);
    cplx wf = grid.weights[n] * values[n];
    cplx cp{1.0, 0.0};
    for (int k = 0; k < K; ++k) {
      mom[k] += wf * cp;
      cp *= base;
    }
  }
  return mom;
}

using MomentsPtr = std::shared_ptr<const std::vector<cplx>>;

cplx mode_sum(const std::vector<cplx>& coeff, cplx a) {
  cplx acc{0.0, 0.0};
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * a + *it;
  return acc;
}

// Schrodinger coherent state pi_{(0,z)} f0 evaluated at x (vacuum pi^{-1/4} e^{-x^2/2})
cplx sb_coherent(cplx z, double x) {
  double p = z.real(), q = z.imag();
  double s = std::numbers::sqrt2 * p;
  cplx expo = cplx(-0.5 * (x - s) * (x - s), -std::numbers::sqrt2 * q * x + q * p);
  return std::pow(pi, -0.25) * std::exp(expo);
}

// evaluator of the Segal-Bargmann reduced transform of line samples
GenericFn sb_transform_evaluable(const Theory& th, SampledFunction f) {
  auto grid = th.x_grid;
  auto vals = std::make_shared<std::vector<cplx>>(std::move(f.values));
  return GenericFn([grid, vals](cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < grid->size(); ++j)
      acc += grid->weights[j] * (*vals)[j] * std::conj(sb_coherent(z, grid->nodes[j].real()));
    return acc;
  });
}

GenericFn disk_transform_evaluable(const Theory& th, MomentsPtr mom) {
  const bool hardy = th.kind == TheoryKind::hardy;
  const int m = th.m;
  auto coh = std::make_shared<std::vector<cplx>>(th.n_modes);
  for (int k = 0; k < th.n_modes; ++k) (*coh)[k] = th.coh_coeff[k] * (*mom)[k];
  return GenericFn([coh, hardy, m](cplx a) {
    double r2 = std::norm(a);
    double pre = hardy ? std::sqrt(1.0 - r2) : std::pow(1.0 - r2, 0.5 * m);
    return pre * mode_sum(*coh, a);
  });
}

std::vector<cplx> require_disk_moments(const Theory& th, const SampledFunction& f) {
  if (f.grid != th.x_grid)
    throw error(errc::grid_mismatch, th.name() + ": function not on the theory's X grid");
  return basis_moments(*th.x_grid, f.values, th.n_modes);
}

// coefficient extraction of an analytic function sampled on the Omega disk grid
std::vector<cplx> omega_mode_extract(const Theory& th, const std::vector<cplx>& ext_values, int K) {
  std::vector<cplx> c = basis_moments(*th.omega_grid, ext_values, K);
  for (int k = 0; k < K; ++k) c[k] /= th.homega[k];
  return c;
}

} // namespace

std::string Theory::name() const {
  switch (kind) {
    case TheoryKind::hardy: return "hardy";
    case TheoryKind::bergman: return "bergman(" + std::to_string(m) + ")";
    case TheoryKind::segal_bargmann: return "segal-bargmann";
  }
  return "?";
}

Theory make_hardy(int n_circle, int nr, int ntheta, double omega_rmax) {
  Theory th;
  th.kind = TheoryKind::hardy;
  th.m = 1;
  th.x_grid = grids::circle_grid(n_circle);
  th.omega_grid = grids::disk_grid(nr, ntheta, grids::DiskLaw::weighted, omega_rmax, 2);
  th.rep = reps::mock_discrete(th.x_grid);
  th.vacuum = reps::vacuum(th.rep);
  th.vac_norm2 = grids::inner_product(th.vacuum, th.vacuum).real();
  th.n_modes = std::min(n_circle / 2, ntheta / 2);
  th.hx.assign(th.n_modes, 1.0);
  th.coh_coeff.assign(th.n_modes, 1.0);
  th.homega.resize(th.n_modes);
  for (int k = 0; k < th.n_modes; ++k) {
    double acc = 0.0;
    for (std::size_t n = 0; n < th.omega_grid->size(); ++n)
      acc += th.omega_grid->weights[n] * std::pow(std::norm(th.omega_grid->nodes[n]), k);
    th.homega[k] = acc;
  }
  return th;
}

Theory make_bergman(int m, int nr, int ntheta, double r_max) {
  if (m < 2) throw error(errc::invalid_input, "make_bergman: m must be >= 2");
  Theory th;
  th.kind = TheoryKind::bergman;
  th.m = m;
  th.x_grid = grids::disk_grid(nr, ntheta, grids::DiskLaw::weighted, r_max, m);
  th.omega_grid = th.x_grid; // X ~ Omega for the disk theory
  th.rep = reps::discrete_series(m, th.x_grid);
  th.vacuum = reps::vacuum(th.rep);
  th.vac_norm2 = grids::inner_product(th.vacuum, th.vacuum).real();
  th.n_modes = ntheta / 2;
  th.hx.resize(th.n_modes);
  th.coh_coeff.resize(th.n_modes);
  double binom = 1.0;
  for (int k = 0; k < th.n_modes; ++k) {
    double acc = 0.0;
    for (std::size_t n = 0; n < th.x_grid->size(); ++n)
      acc += th.x_grid->weights[n] * std::pow(std::norm(th.x_grid->nodes[n]), k);
    th.hx[k] = acc;
    th.coh_coeff[k] = binom;
    binom *= static_cast<double>(m + k) / (k + 1);
  }
  th.homega = th.hx;
  return th;
}

Theory make_segal_bargmann(int n_line, int n_plane) {
  Theory th;
  th.kind = TheoryKind::segal_bargmann;
  th.m = 0;
  th.x_grid = grids::line_grid(n_line);
  th.omega_grid = grids::plane_grid(n_plane);
  th.rep = reps::schrodinger(th.x_grid);
  th.vacuum = reps::vacuum(th.rep);
  th.vac_norm2 = grids::inner_product(th.vacuum, th.vacuum).real();
  th.n_modes = n_line / 2;
  return th;
}

cplx wavelet_full(const Theory& th, const SampledFunction& f, const GroupElement& g) {
  SampledFunction coherent = reps::apply(th.rep, g, th.vacuum);
  return grids::inner_product(f, coherent);
}

grids::SampledFunction reduced_transform(const Theory& th, const SampledFunction& f) {
  if (th.kind == TheoryKind::segal_bargmann) {
    if (f.grid != th.x_grid)
      throw error(errc::grid_mismatch, "reduced_transform: function not on the theory's X grid");
    GenericFn eval = sb_transform_evaluable(th, f);
    return grids::make_sampled(th.omega_grid, fn::ClosedForm(eval));
  }
  auto mom = std::make_shared<std::vector<cplx>>(require_disk_moments(th, f));
  GenericFn eval = disk_transform_evaluable(th, mom);
  return grids::make_sampled(th.omega_grid, fn::ClosedForm(eval));
}

fn::GenericFn analytic_extension(const Theory& th, const SampledFunction& f) {
  if (th.kind == TheoryKind::segal_bargmann) {
    if (f.grid != th.x_grid)
      throw error(errc::grid_mismatch, "analytic_extension: function not on the theory's X grid");
    return sb_transform_evaluable(th, f);
  }
  auto mom = require_disk_moments(th, f);
  auto coeff = std::make_shared<std::vector<cplx>>(th.n_modes);
  for (int k = 0; k < th.n_modes; ++k) (*coeff)[k] = mom[k] / th.hx[k];
  return GenericFn([coeff](cplx a) { return mode_sum(*coeff, a); });
}

grids::SampledFunction inverse_transform(const Theory& th, const SampledFunction& fhat,
                                         bool regularized) {
  if (fhat.grid != th.omega_grid)
    throw error(errc::grid_mismatch, "inverse_transform: fhat not on the Omega grid");

  if (th.kind == TheoryKind::segal_bargmann) {
    auto values = std::make_shared<std::vector<cplx>>(fhat.values);
    auto omega = th.omega_grid;
    GenericFn eval = [omega, values](cplx xz) {
      double x = xz.real();
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < omega->size(); ++k) {
        double absorbed = omega->weights[k] * std::exp(std::norm(omega->nodes[k]));
        acc += absorbed * (*values)[k] * sb_coherent(omega->nodes[k], x);
      }
      return acc / pi;
    };
    return grids::make_sampled(th.x_grid, fn::ClosedForm(eval));
  }

  if (th.kind == TheoryKind::hardy && !regularized)
    throw error(errc::divergent_integral,
                "inverse_transform: the Hardy inverse integral is divergent; "
                "request the regularized (limiting-procedure) form");

  // strip the known radial factor, then resolve in the grid's monomial basis
  std::vector<cplx> ext(fhat.values.size());
  for (std::size_t n = 0; n < ext.size(); ++n) {
    double r2 = std::norm(th.omega_grid->nodes[n]);
    ext[n] = fhat.values[n] / disk_prefactor(th, r2);
  }
  std::vector<cplx> c = omega_mode_extract(th, ext, th.n_modes);
  for (int k = 0; k < th.n_modes; ++k) c[k] /= th.coh_coeff[k] * th.hx[k];
  // c now holds monomial coefficients of the reconstruction on X
  Polynomial p(c);
  return grids::make_sampled(th.x_grid, RationalFn::from_poly(std::move(p)));
}

grids::SampledFunction project(const Theory& th, const SampledFunction& f) {
  if (th.kind == TheoryKind::segal_bargmann)
    return inverse_transform(th, reduced_transform(th, f));
  std::vector<cplx> mom = require_disk_moments(th, f);
  std::vector<cplx> c(th.n_modes);
  for (int k = 0; k < th.n_modes; ++k) c[k] = mom[k] / th.hx[k];
  return grids::make_sampled(th.x_grid, RationalFn::from_poly(Polynomial(std::move(c))));
}

grids::SampledFunction reduced_projection(const Theory& th, const SampledFunction& w) {
  if (w.grid != th.omega_grid)
    throw error(errc::grid_mismatch, "reduced_projection: function not on the Omega grid");

  if (th.kind == TheoryKind::hardy)
    throw error(errc::divergent_integral,
                "reduced_projection: the invariant measure on Omega is divergent for the "
                "Hardy theory");

  if (th.kind == TheoryKind::segal_bargmann) {
    auto omega = th.omega_grid;
    auto values = std::make_shared<std::vector<cplx>>(w.values);
    GenericFn eval = [omega, values](cplx zp) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < omega->size(); ++k) {
        cplx z = omega->nodes[k];
        cplx expo = 0.5 * std::norm(z) - 0.5 * std::norm(zp) + std::conj(z) * zp;
        acc += omega->weights[k] * (*values)[k] * std::exp(expo);
      }
      return acc / pi;
    };
    return grids::make_sampled(th.omega_grid, fn::ClosedForm(eval));
  }

  // Bergman: da = lambda * d(Lebesgue)/(1-|a|^2)^2, lambda fixed by
  // integral |f0hat|^2 da = <f0, f0>.
  auto omega = th.omega_grid;
  const int m = th.m;
  const double mass = th.hx[0];
  std::vector<double> w_inv(omega->size());
  double vac_int = 0.0;
  for (std::size_t k = 0; k < omega->size(); ++k) {
    double r2 = std::norm(omega->nodes[k]);
    w_inv[k] = omega->weights[k] * std::pow(4.0, m - 1) * std::pow(1.0 - r2, -m);
    double f0hat = std::pow(1.0 - r2, 0.5 * m) * mass;
    vac_int += w_inv[k] * f0hat * f0hat;
  }
  double lambda = th.vac_norm2 / vac_int;
  for (double& x : w_inv) x *= lambda;

  auto weights = std::make_shared<std::vector<double>>(std::move(w_inv));
  auto values = std::make_shared<std::vector<cplx>>(w.values);
  auto inv_sections = std::make_shared<std::vector<Su11>>();
  inv_sections->reserve(omega->size());
  for (const cplx& node : omega->nodes)
    inv_sections->push_back(groups::su11_inverse(groups::su11_section(node)));
  GenericFn eval = [omega, weights, values, inv_sections, m, mass](cplx ap) {
    Su11 sp = groups::su11_section(ap);
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < omega->size(); ++k) {
      groups::Su11Decomposition d = groups::su11_decompose(groups::su11_mul((*inv_sections)[k], sp));
      cplx f0hat = std::pow(1.0 - std::norm(d.a), 0.5 * m) * mass;
      cplx chibar = std::polar(1.0, m * d.psi);
      acc += (*weights)[k] * (*values)[k] * f0hat * chibar;
    }
    return acc;
  };
  return grids::make_sampled(th.omega_grid, fn::ClosedForm(eval));
}

cplx kernel(const Theory& th, cplx z, cplx w) {
  switch (th.kind) {
    case TheoryKind::hardy: {
      cplx den = 1.0 - std::conj(w) * z;
      if (std::abs(den) < 1e-12) throw error(errc::pole, "kernel: boundary evaluation");
      return 1.0 / den;
    }
    case TheoryKind::bergman: {
      cplx den = 1.0 - std::conj(w) * z;
      if (std::abs(den) < 1e-12) throw error(errc::pole, "kernel: boundary evaluation");
      double c_m = (th.m - 1) * std::pow(4.0, th.m - 1) / pi;
      return c_m * std::pow(den, -th.m);
    }
    case TheoryKind::segal_bargmann:
      return std::exp(-std::norm(z) + w * std::conj(z));
  }
  throw error(errc::invalid_input, "kernel: unknown theory");
}

cplx projection_kernel(const Theory& th, cplx z, cplx w) {
  if (th.kind == TheoryKind::segal_bargmann)
    return std::exp(-0.5 * (std::norm(z) + std::norm(w)) + std::conj(z) * w);
  Su11 u = groups::su11_mul(groups::su11_inverse(groups::su11_section(z)), groups::su11_section(w));
  groups::Su11Decomposition d = groups::su11_decompose(u);
  int power = th.kind == TheoryKind::hardy ? 1 : th.m;
  cplx f0hat = std::pow(1.0 - std::norm(d.a), 0.5 * power) *
               (th.kind == TheoryKind::hardy ? 1.0 : th.hx[0]);
  return f0hat * std::polar(1.0, power * d.psi);
}

CoeffVector taylor_coeffs(const Theory& th, const SampledFunction& f, int K) {
  CoeffVector out;
  out.theory = th.kind;
  out.m = th.m;
  if (th.kind == TheoryKind::segal_bargmann) {
    if (K + 1 > th.n_modes)
      throw error(errc::invalid_input, "taylor_coeffs: K too large for grid");
    out.coeffs.resize(K + 1);
    double norm2 = grids::inner_product(f, f).real();
    double captured = 0.0;
    for (int k = 0; k <= K; ++k) {
      SampledFunction hk = grids::make_sampled(th.x_grid, fn::ClosedForm(fn::hermite_function(k)));
      out.coeffs[k] = grids::inner_product(f, hk);
      captured += std::norm(out.coeffs[k]);
    }
    out.truncation_error = std::sqrt(std::max(0.0, norm2 - captured));
    return out;
  }
  if (K + 1 > th.n_modes)
    throw error(errc::invalid_input, "taylor_coeffs: K too large for grid");
  std::vector<cplx> mom = basis_moments(*th.x_grid, f.values, K + 1);
  double norm2 = grids::inner_product(f, f).real();
  double captured = 0.0;
  out.coeffs = mom;
  for (int k = 0; k <= K; ++k) captured += std::norm(mom[k]) / th.hx[k];
  out.truncation_error = std::sqrt(std::max(0.0, norm2 - captured));
  return out;
}

cplx taylor_partial_sum(const Theory& th, const CoeffVector& coeffs, cplx a) {
  double r2 = std::norm(a);
  cplx acc{0.0, 0.0};
  switch (th.kind) {
    case TheoryKind::hardy: {
      cplx ap{1.0, 0.0};
      for (std::size_t k = 0; k < coeffs.coeffs.size(); ++k, ap *= a)
        acc += ap * coeffs.coeffs[k];
      return std::sqrt(1.0 - r2) * acc;
    }
    case TheoryKind::bergman: {
      cplx ap{1.0, 0.0};
      double binom = 1.0;
      for (std::size_t k = 0; k < coeffs.coeffs.size(); ++k, ap *= a) {
        acc += binom * ap * coeffs.coeffs[k];
        binom *= static_cast<double>(th.m + k) / (k + 1);
      }
      return std::pow(1.0 - r2, 0.5 * th.m) * acc;
    }
    case TheoryKind::segal_bargmann: {
      cplx ap{1.0, 0.0};
      double fact = 1.0;
      for (std::size_t k = 0; k < coeffs.coeffs.size(); ++k, ap *= a) {
        acc += ap / std::sqrt(fact) * coeffs.coeffs[k];
        fact *= k + 1.0;
      }
      return std::exp(-0.5 * r2) * acc;
    }
  }
  throw error(errc::invalid_input, "taylor_partial_sum: unknown theory");
}

namespace {

double cr_sup(const Theory& th, const fn::ClosedForm& form, double h) {
  auto F = [&](cplx z) { return fn::eval_form(form, z); };
  double cap = th.kind == TheoryKind::segal_bargmann ? 2.5 : 0.8;
  double sup = 0.0;
  for (const cplx& z : th.omega_grid->nodes) {
    if (std::abs(z) > cap) continue;
    cplx dx = (F(z + h) - F(z - h)) / (2.0 * h);
    cplx dy = (F(z + cplx(0.0, h)) - F(z - cplx(0.0, h))) / (2.0 * h);
    cplx dbar = 0.5 * (dx + cplx(0.0, 1.0) * dy);
    cplx val = th.kind == TheoryKind::segal_bargmann ? dbar + 0.5 * z * F(z) : dbar;
    sup = std::max(sup, std::abs(val));
  }
  return sup;
}

} // namespace

CrResidual cr_residual(const Theory& th, const SampledFunction& fhat, double h) {
  if (!fhat.has_form())
    throw error(errc::not_supported, "cr_residual: fhat needs a closed form for off-grid steps");
  CrResidual out;
  out.step = h;
  out.residual = cr_sup(th, fhat.form, h);
  double half = cr_sup(th, fhat.form, 0.5 * h);
  out.error_estimate = std::abs(out.residual - half) * (4.0 / 3.0);
  return out;
}

grids::SampledFunction apply_rho(const Theory& th, const GroupElement& g,
                                 const SampledFunction& fhat) {
  if (!fhat.has_form()) throw error(errc::not_supported, "apply_rho: fhat needs a closed form");
  fn::ClosedForm base = fhat.form;

  if (th.kind == TheoryKind::segal_bargmann) {
    const Heis& e = expect_heis(g, "apply_rho");
    if (e.n() != 1) throw error(errc::dimension_mismatch, "apply_rho: n = 1 expected");
    Heis ginv = groups::heis_inverse(e);
    GenericFn eval = [base, ginv](cplx a) {
      Heis u = groups::heis_mul(ginv, Heis(0.0, a));
      cplx chibar = std::polar(1.0, -2.0 * u.t);
      return fn::eval_form(base, u.z[0]) * chibar;
    };
    return grids::make_sampled(th.omega_grid, fn::ClosedForm(eval));
  }

  const Su11& e = expect_su11(g, "apply_rho");
  Su11 ginv = groups::su11_inverse(e);
  int power = th.kind == TheoryKind::hardy ? 1 : th.m;
  GenericFn eval = [base, ginv, power](cplx a) {
    Su11 u = groups::su11_mul(ginv, groups::su11_section(a));
    groups::Su11Decomposition d = groups::su11_decompose(u);
    cplx chibar = std::polar(1.0, power * d.psi);
    return fn::eval_form(base, d.a) * chibar;
  };
  return grids::make_sampled(th.omega_grid, fn::ClosedForm(eval));
}

} // namespace cohana::cstrans
