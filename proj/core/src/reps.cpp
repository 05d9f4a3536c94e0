#include "cohana/reps.hpp"

#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"

namespace cohana::reps {

using fn::ClosedForm;
using fn::GaussHermiteFn;
using fn::GenericFn;
using fn::Polynomial;
using fn::RationalFn;
using grids::SampledFunction;
using groups::Heis;
using groups::Su11;

Representation mock_discrete(grids::GridPtr circle) {
  if (circle->domain != grids::Domain::circle)
    throw error(errc::invalid_input, "mock_discrete: needs a circle grid");
  return Representation{RepKind::mock_discrete, 1, std::move(circle)};
}

Representation discrete_series(int m, grids::GridPtr disk) {
  if (m < 2) throw error(errc::invalid_input, "discrete_series: m must be >= 2");
  if (disk->domain != grids::Domain::disk)
    throw error(errc::invalid_input, "discrete_series: needs a disk grid");
  return Representation{RepKind::discrete_series, m, std::move(disk)};
}

Representation schrodinger(grids::GridPtr line) {
  if (line->domain != grids::Domain::line)
    throw error(errc::invalid_input, "schrodinger: needs a line grid");
  return Representation{RepKind::schrodinger, 0, std::move(line)};
}

namespace {

const Su11& expect_su11(const GroupElement& g, const char* who) {
  if (const auto* s = std::get_if<Su11>(&g)) return *s;
  throw error(errc::invalid_input, std::string(who) + ": group element must be SU(1,1)");
}

const Heis& expect_heis(const GroupElement& g, const char* who) {
  if (const auto* h = std::get_if<Heis>(&g)) return *h;
  throw error(errc::invalid_input, std::string(who) + ": group element must be Heisenberg");
}

// multiplier (conj(beta) z + conj(alpha))^{-power} and the substitution
// z -> (alpha z + beta)/(conj(beta) z + conj(alpha)), entries of g^{-1}
ClosedForm su11_transform_form(const ClosedForm& f, const groups::ActionEntries& e, int power) {
  cplx a = e.alpha, b = e.beta, c = std::conj(e.beta), d = std::conj(e.alpha);
  // the denominator cannot vanish on |z| <= 1: |conj(alpha)| > |conj(beta)|
  if (const auto* r = std::get_if<RationalFn>(&f)) {
    RationalFn moved = fn::compose_mobius(*r, a, b, c, d);
    RationalFn mult(Polynomial::constant(1.0), fn::binomial_power(c, d, power));
    return mult * moved;
  }
  if (const auto* g = std::get_if<GenericFn>(&f)) {
    GenericFn base = *g;
    return GenericFn([=](cplx z) {
      cplx den = c * z + d;
      return std::pow(den, -power) * base((a * z + b) / den);
    });
  }
  throw error(errc::not_supported,
              "apply: SU(1,1) representations need a rational or generic closed form");
}

ClosedForm schrodinger_transform_form(const ClosedForm& f, const Heis& g) {
  const auto* gh = std::get_if<GaussHermiteFn>(&f);
  if (!gh)
    throw error(errc::not_supported,
                "apply: the Schrodinger representation acts on Gauss-Hermite closed forms only");
  if (g.n() != 1)
    throw error(errc::dimension_mismatch, "apply: Schrodinger representation is built for n = 1");
  double p = g.z[0].real(), q = g.z[0].imag();
  double s = std::numbers::sqrt2 * p;
  GaussHermiteFn out;
  out.p = fn::shift_argument(gh->p, -s);
  out.beta = gh->beta + s - cplx(0.0, std::numbers::sqrt2 * q);
  out.gamma = gh->gamma - 0.5 * s * s - gh->beta * s + cplx(0.0, 2.0 * g.t + q * p);
  return out;
}

} // namespace

SampledFunction apply(const Representation& rep, const GroupElement& g, const SampledFunction& f) {
  if (f.grid != rep.space) throw error(errc::grid_mismatch, "apply: function not on the rep's space");
  if (!f.has_form()) throw error(errc::not_supported, "apply: input needs a closed form");
  if (rep.kind == RepKind::schrodinger) {
    ClosedForm out = schrodinger_transform_form(f.form, expect_heis(g, "apply"));
    return grids::make_sampled(rep.space, out);
  }
  int power = rep.kind == RepKind::mock_discrete ? 1 : rep.m;
  groups::ActionEntries e = groups::su11_action_entries(expect_su11(g, "apply"));
  ClosedForm out_form = su11_transform_form(f.form, e, power);
  // node values from the pointwise action formula; repeated applies stay
  // accurate where the expanded rational coefficients would cancel
  SampledFunction out;
  out.grid = rep.space;
  out.form = std::move(out_form);
  out.values.resize(rep.space->size());
  cplx a = e.alpha, b = e.beta, c = std::conj(e.beta), d = std::conj(e.alpha);
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    cplx z = rep.space->nodes[k];
    cplx den = c * z + d;
    out.values[k] = std::pow(den, -power) * fn::eval_form(f.form, (a * z + b) / den);
  }
  return out;
}

SampledFunction vacuum(const Representation& rep) {
  switch (rep.kind) {
    case RepKind::mock_discrete:
    case RepKind::discrete_series:
      return grids::make_sampled(rep.space, RationalFn::from_poly(Polynomial::constant(1.0)));
    case RepKind::schrodinger:
      return grids::make_sampled(rep.space, fn::hermite_function(0));
  }
  throw error(errc::invalid_input, "vacuum: unknown representation");
}

cplx vacuum_character(const Representation& rep, const GroupElement& h) {
  if (rep.kind == RepKind::schrodinger) {
    const Heis& e = expect_heis(h, "vacuum_character");
    for (const auto& zj : e.z)
      if (std::abs(zj) > 1e-12)
        throw error(errc::invalid_input, "vacuum_character: element not in the center (t, 0)");
    return std::polar(1.0, 2.0 * e.t);
  }
  const Su11& e = expect_su11(h, "vacuum_character");
  if (std::abs(e.beta) > 1e-12)
    throw error(errc::invalid_input, "vacuum_character: element not in the subgroup h_psi");
  // chi(h_psi) = e^{-i m psi}: the multiplier of the g^{-1}-parameterized formula
  int power = rep.kind == RepKind::mock_discrete ? 1 : rep.m;
  return std::pow(std::conj(e.alpha) / std::abs(e.alpha), power);
}

double unitarity_residual(const Representation& rep, const GroupElement& g,
                          const SampledFunction& f1, const SampledFunction& f2) {
  cplx before = grids::inner_product(f1, f2);
  cplx after = grids::inner_product(apply(rep, g, f1), apply(rep, g, f2));
  return std::abs(after - before);
}

} // namespace cohana::reps
