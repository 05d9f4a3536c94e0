#pragma once

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "cohana/grids.hpp"

namespace cohana::fn {

using cplx = std::complex<double>;

// Dense polynomial, ascending coefficients.
struct Polynomial {
  std::vector<cplx> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs) : c(std::move(coeffs)) { trim(); }
  static Polynomial constant(cplx v) { return Polynomial({v}); }
  static Polynomial monomial(int degree, cplx v = 1.0);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  cplx eval(cplx z) const;
  void trim();
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(cplx s, const Polynomial& p);
// p(x + s)
Polynomial shift_argument(const Polynomial& p, cplx s);
// (a z + b)^k (c z + d)^{n-k} expansions live here for Mobius composition
Polynomial binomial_power(cplx a, cplx b, int k);

// Rational function num/den; closed under the Mobius substitutions used by
// the circle and disk representations.
struct RationalFn {
  Polynomial num;
  Polynomial den;

  RationalFn() : num(Polynomial::constant(0.0)), den(Polynomial::constant(1.0)) {}
  RationalFn(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {}
  static RationalFn from_poly(Polynomial p) { return RationalFn(std::move(p), Polynomial::constant(1.0)); }

  cplx eval(cplx z) const;
};

RationalFn operator*(const RationalFn& f, const RationalFn& g);
RationalFn operator+(const RationalFn& f, const RationalFn& g);
// f((a z + b)/(c z + d))
RationalFn compose_mobius(const RationalFn& f, cplx a, cplx b, cplx c, cplx d);

// p(x) * exp(-x^2/2 + beta x + gamma); the closed class of the Schrodinger
// representation (shifts update beta/gamma, modulations are exact).
struct GaussHermiteFn {
  Polynomial p;
  cplx beta{0.0, 0.0};
  cplx gamma{0.0, 0.0};

  cplx eval(double x) const;
};

// L2-normalized Hermite function h_n.
GaussHermiteFn hermite_function(int n);

// Bivariate polynomial in (z, conj z).
struct Poly2 {
  std::map<std::pair<int, int>, cplx> terms; // (i, j) -> coeff of z^i conj(z)^j

  static Poly2 constant(cplx v);
  static Poly2 zpow(int i, int j = 0, cplx v = 1.0);
  cplx eval(cplx z) const;
  bool empty() const { return terms.empty(); }
};

// P(z, conj z) * exp(-|z|^2/2 + u z + v conj(z) + c); the closed class of the
// reduced transforms on C (shifts and unimodular phases stay inside).
struct PlaneGaussFn {
  Poly2 p;
  cplx u{0.0, 0.0}, v{0.0, 0.0}, c{0.0, 0.0};

  cplx eval(cplx z) const;
  // value without the e^{-|z|^2/2} factor (stable under the Gaussian grid)
  cplx eval_scaled(cplx z) const;
};

// Catch-all evaluable for derived quantities (transform images etc.).
using GenericFn = std::function<cplx(cplx)>;

using ClosedForm = std::variant<std::monostate, RationalFn, GaussHermiteFn, PlaneGaussFn, GenericFn>;

bool has_form(const ClosedForm& f);
cplx eval_form(const ClosedForm& f, cplx z);

} // namespace cohana::fn

namespace cohana::grids {

// Complex values on a grid, optionally backed by a closed-form evaluable that
// resamples deterministically onto any grid of the same domain.
struct SampledFunction {
  GridPtr grid;
  std::vector<cplx> values;
  fn::ClosedForm form;

  bool has_form() const { return fn::has_form(form); }
};

SampledFunction make_sampled(GridPtr grid, const fn::ClosedForm& form);
SampledFunction make_sampled(GridPtr grid, std::vector<cplx> values);
SampledFunction resample(const SampledFunction& f, GridPtr grid);

// sum_k w_k f(x_k) conj(g(x_k)); conjugate-symmetric by construction.
cplx inner_product(const SampledFunction& f, const SampledFunction& g);
double norm_l2(const SampledFunction& f);

} // namespace cohana::grids
