#include "cohana/functions.hpp"

#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"

namespace cohana::fn {

Polynomial Polynomial::monomial(int degree, cplx v) {
  std::vector<cplx> c(degree + 1, cplx{0.0, 0.0});
  c[degree] = v;
  return Polynomial(std::move(c));
}

cplx Polynomial::eval(cplx z) const {
  cplx acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void Polynomial::trim() {
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.empty()) c.push_back(cplx{0.0, 0.0});
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<cplx> c(std::max(p.c.size(), q.c.size()), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < p.c.size(); ++i) c[i] += p.c[i];
  for (std::size_t i = 0; i < q.c.size(); ++i) c[i] += q.c[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return p + (cplx{-1.0, 0.0} * q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  std::vector<cplx> c(p.c.size() + q.c.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t j = 0; j < q.c.size(); ++j) c[i + j] += p.c[i] * q.c[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(cplx s, const Polynomial& p) {
  std::vector<cplx> c(p.c);
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial shift_argument(const Polynomial& p, cplx s) {
  // p(x + s) via Horner in (x + s)
  Polynomial acc = Polynomial::constant(0.0);
  Polynomial lin(std::vector<cplx>{s, 1.0});
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
    acc = acc * lin + Polynomial::constant(*it);
  return acc;
}

Polynomial binomial_power(cplx a, cplx b, int k) {
  // (a z + b)^k
  Polynomial out = Polynomial::constant(1.0);
  Polynomial base(std::vector<cplx>{b, a});
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

cplx RationalFn::eval(cplx z) const {
  cplx d = den.eval(z);
  if (std::abs(d) < 1e-300) throw error(errc::pole, "RationalFn: evaluation at a pole");
  return num.eval(z) / d;
}

RationalFn operator*(const RationalFn& f, const RationalFn& g) {
  return RationalFn(f.num * g.num, f.den * g.den);
}

RationalFn operator+(const RationalFn& f, const RationalFn& g) {
  return RationalFn(f.num * g.den + g.num * f.den, f.den * g.den);
}

RationalFn compose_mobius(const RationalFn& f, cplx a, cplx b, cplx c, cplx d) {
  int n = std::max(f.num.degree(), f.den.degree());
  auto homogenize = [&](const Polynomial& p) {
    Polynomial out = Polynomial::constant(0.0);
    for (int k = 0; k <= n; ++k) {
      cplx coeff = k < static_cast<int>(p.c.size()) ? p.c[k] : cplx{0.0, 0.0};
      if (coeff == cplx{0.0, 0.0}) continue;
      out = out + coeff * (binomial_power(a, b, k) * binomial_power(c, d, n - k));
    }
    return out;
  };
  return RationalFn(homogenize(f.num), homogenize(f.den));
}

cplx GaussHermiteFn::eval(double x) const {
  return p.eval(x) * std::exp(-0.5 * x * x + beta * x + gamma);
}

GaussHermiteFn hermite_function(int n) {
  // Physicists' Hermite polynomials, then L2 normalization.
  Polynomial h0 = Polynomial::constant(1.0);
  Polynomial h1(std::vector<cplx>{0.0, 2.0});
  Polynomial h = n == 0 ? h0 : h1;
  Polynomial prev = h0;
  for (int k = 1; k < n; ++k) {
    Polynomial next = Polynomial(std::vector<cplx>{0.0, 2.0}) * h - cplx(2.0 * k, 0.0) * prev;
    prev = h;
    h = next;
  }
  double norm = std::pow(std::numbers::pi, -0.25);
  for (int k = 1; k <= n; ++k) norm /= std::sqrt(2.0 * k);
  GaussHermiteFn out;
  out.p = cplx(norm, 0.0) * h;
  return out;
}

Poly2 Poly2::constant(cplx v) {
  Poly2 p;
  if (v != cplx{0.0, 0.0}) p.terms[{0, 0}] = v;
  return p;
}

Poly2 Poly2::zpow(int i, int j, cplx v) {
  Poly2 p;
  if (v != cplx{0.0, 0.0}) p.terms[{i, j}] = v;
  return p;
}

cplx Poly2::eval(cplx z) const {
  cplx zb = std::conj(z), acc{0.0, 0.0};
  for (const auto& [ij, coeff] : terms)
    acc += coeff * std::pow(z, ij.first) * std::pow(zb, ij.second);
  return acc;
}

cplx PlaneGaussFn::eval(cplx z) const {
  return p.eval(z) * std::exp(-0.5 * std::norm(z) + u * z + v * std::conj(z) + c);
}

cplx PlaneGaussFn::eval_scaled(cplx z) const {
  return p.eval(z) * std::exp(u * z + v * std::conj(z) + c);
}

bool has_form(const ClosedForm& f) {
  return !std::holds_alternative<std::monostate>(f);
}

cplx eval_form(const ClosedForm& f, cplx z) {
  if (const auto* r = std::get_if<RationalFn>(&f)) return r->eval(z);
  if (const auto* g = std::get_if<GaussHermiteFn>(&f)) return g->eval(z.real());
  if (const auto* p = std::get_if<PlaneGaussFn>(&f)) return p->eval(z);
  if (const auto* fn = std::get_if<GenericFn>(&f)) return (*fn)(z);
  throw error(errc::not_supported, "eval_form: no closed form attached");
}

} // namespace cohana::fn

namespace cohana::grids {

SampledFunction make_sampled(GridPtr grid, const fn::ClosedForm& form) {
  SampledFunction f;
  f.grid = std::move(grid);
  f.form = form;
  f.values.resize(f.grid->size());
  for (std::size_t k = 0; k < f.grid->size(); ++k)
    f.values[k] = fn::eval_form(form, f.grid->nodes[k]);
  return f;
}

SampledFunction make_sampled(GridPtr grid, std::vector<cplx> values) {
  if (values.size() != grid->size())
    throw error(errc::grid_mismatch, "make_sampled: value count does not match grid");
  SampledFunction f;
  f.grid = std::move(grid);
  f.values = std::move(values);
  return f;
}

SampledFunction resample(const SampledFunction& f, GridPtr grid) {
  if (!f.has_form())
    throw error(errc::not_supported, "resample: function has no closed form");
  return make_sampled(std::move(grid), f.form);
}

cplx inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (f.grid != g.grid) throw error(errc::grid_mismatch, "inner_product: grid mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < f.values.size(); ++k)
    acc += f.grid->weights[k] * f.values[k] * std::conj(g.values[k]);
  return acc;
}

double norm_l2(const SampledFunction& f) {
  return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

} // namespace cohana::grids
