#include "cohana/groups.hpp"

#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"

namespace cohana::groups {

namespace {
constexpr double kNormalizeBand = 1e-8;
}

Su11::Su11(cplx a, cplx b) : alpha(a), beta(b) {
  double r2 = std::norm(alpha) - std::norm(beta);
  if (std::abs(r2 - 1.0) <= kNormalizeBand) {
    if (r2 <= 0.0) throw error(errc::invalid_input, "Su11: non-positive pseudo-norm");
    double s = std::sqrt(r2);
    alpha /= s;
    beta /= s;
  } else {
    throw error(errc::invalid_input, "Su11: |alpha|^2 - |beta|^2 must be 1");
  }
}

Su11 Su11::rotation(double psi) {
  Su11 g;
  g.alpha = std::polar(1.0, psi);
  g.beta = 0.0;
  return g;
}

double Su11::invariant_defect() const {
  return std::abs(std::norm(alpha) - std::norm(beta) - 1.0);
}

Su11 su11_from_sl2(double a, double b, double c, double d) {
  if (std::abs(a * d - b * c - 1.0) > 1e-10)
    throw error(errc::invalid_input, "su11_from_sl2: determinant must be 1");
  cplx alpha = 0.5 * cplx(a + d, b - c);
  cplx beta = 0.5 * cplx(c + b, d - a);
  return Su11(alpha, beta);
}

Su11 su11_mul(const Su11& g1, const Su11& g2) {
  Su11 out;
  out.alpha = g1.alpha * g2.alpha + g1.beta * std::conj(g2.beta);
  out.beta = g1.alpha * g2.beta + g1.beta * std::conj(g2.alpha);
  return out;
}

Su11 su11_inverse(const Su11& g) {
  Su11 out;
  out.alpha = std::conj(g.alpha);
  out.beta = -g.beta;
  return out;
}

Su11Decomposition su11_decompose(const Su11& g) {
  Su11Decomposition d;
  d.psi = std::arg(g.alpha);
  d.a = g.beta / std::conj(g.alpha);
  return d;
}

Su11 su11_section(cplx a) {
  if (std::abs(a) >= 1.0)
    throw error(errc::domain_error, "su11_section: |a| must be < 1");
  Su11 g;
  g.alpha = 1.0 / std::sqrt(1.0 - std::norm(a));
  g.beta = a * g.alpha;
  return g;
}

ActionEntries su11_action_entries(const Su11& g) {
  Su11 gi = su11_inverse(g);
  return ActionEntries{gi.alpha, gi.beta};
}

cplx mobius_disk(const Su11& g, cplx z) {
  ActionEntries e = su11_action_entries(g);
  cplx den = std::conj(e.beta) * z + std::conj(e.alpha);
  if (std::abs(den) < 1e-14) throw error(errc::pole, "mobius_disk: pole");
  return (e.alpha * z + e.beta) / den;
}

Orbit orbit_classify(cplx z) {
  double r2 = std::norm(z);
  if (std::abs(r2 - 1.0) <= 1e-12) return Orbit::circle;
  return r2 < 1.0 ? Orbit::disk : Orbit::exterior;
}

Heis::Heis(double t_, std::vector<cplx> z_) : t(t_), z(std::move(z_)) {
  if (z.empty()) throw error(errc::invalid_input, "Heis: n must be >= 1");
}

Heis heis_mul(const Heis& g1, const Heis& g2) {
  if (g1.n() != g2.n())
    throw error(errc::dimension_mismatch, "heis_mul: dimension mismatch");
  double twist = 0.0;
  std::vector<cplx> z(g1.n());
  for (std::size_t j = 0; j < g1.n(); ++j) {
    twist += std::imag(std::conj(g1.z[j]) * g2.z[j]);
    z[j] = g1.z[j] + g2.z[j];
  }
  return Heis(g1.t + g2.t + 0.5 * twist, std::move(z));
}

Heis heis_inverse(const Heis& g) {
  std::vector<cplx> z(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) z[j] = -g.z[j];
  return Heis(-g.t, std::move(z));
}

Heis heis_reduce(const Heis& g) {
  const double pi = std::numbers::pi;
  double t = std::fmod(g.t, pi);
  if (t < 0.0) t += pi;
  return Heis(t, g.z);
}

double heis_distance(const Heis& g1, const Heis& g2) {
  if (g1.n() != g2.n())
    throw error(errc::dimension_mismatch, "heis_distance: dimension mismatch");
  double d = std::abs(g1.t - g2.t);
  for (std::size_t j = 0; j < g1.n(); ++j) d = std::max(d, std::abs(g1.z[j] - g2.z[j]));
  return d;
}

double su11_distance(const Su11& g1, const Su11& g2) {
  return std::max(std::abs(g1.alpha - g2.alpha), std::abs(g1.beta - g2.beta));
}

} // namespace cohana::groups
