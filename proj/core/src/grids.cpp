#include "cohana/grids.hpp"

#include <cmath>
#include <numbers>

#include "cohana/errors.hpp"
#include "cohana/quadrature.hpp"

namespace cohana::grids {

namespace {
const double pi = std::numbers::pi;

void check_mass(Grid& g, double quadrature_mass) {
  if (std::abs(quadrature_mass - g.stated_mass) > 1e-10 * std::max(1.0, g.stated_mass))
    throw error(errc::numerical, "grid: quadrature mass does not match the stated measure");
}
} // namespace

GridPtr circle_grid(int n) {
  if (n < 4) throw error(errc::invalid_input, "circle_grid: N must be >= 4");
  auto g = std::make_shared<Grid>();
  g->domain = Domain::circle;
  g->law = Law::circle_uniform;
  g->n1 = n;
  g->nodes.resize(n);
  g->weights.assign(n, 1.0 / n);
  for (int k = 0; k < n; ++k) g->nodes[k] = std::polar(1.0, 2.0 * pi * k / n);
  g->stated_mass = 1.0;
  return g;
}

GridPtr disk_grid(int nr, int ntheta, DiskLaw law, double r_max, int m) {
  if (nr < 2 || ntheta < 4) throw error(errc::invalid_input, "disk_grid: grid too small");
  if (law == DiskLaw::weighted && m < 2)
    throw error(errc::invalid_input, "disk_grid: weight (1-|w|^2)^{m-2} is non-integrable for m < 2");
  if (r_max <= 0.0) throw error(errc::invalid_input, "disk_grid: r_max must be positive");
  if (law == DiskLaw::invariant) {
    if (r_max > 1.0 - 1e-6)
      throw error(errc::domain_error, "disk_grid: invariant law requires r_max <= 1 - 1e-6");
  } else if (r_max > 1.0) {
    throw error(errc::invalid_input, "disk_grid: r_max must be <= 1");
  }

  auto g = std::make_shared<Grid>();
  g->domain = Domain::disk;
  g->law = law == DiskLaw::invariant ? Law::disk_invariant : Law::disk_weighted;
  g->m = law == DiskLaw::weighted ? m : 0;
  g->r_max = r_max;
  g->n1 = nr;
  g->n2 = ntheta;
  g->boundary_warning = (law == DiskLaw::invariant && r_max > 0.98);

  // Weighted law: Gauss-Legendre in r (polynomial density). Invariant law:
  // Gauss-Legendre in v = 1/(1-r^2), which carries the measure exactly:
  // r (1-r^2)^{-2} dr = dv/2.
  Rule1D radial;
  std::vector<double> radial_w; // radial weight including the density and r dr
  if (law == DiskLaw::weighted) {
    radial = gauss_legendre(nr, 0.0, r_max);
    radial_w.resize(nr);
    for (int j = 0; j < nr; ++j) {
      double r = radial.nodes[j];
      radial_w[j] =
          radial.weights[j] * r * std::pow(4.0, 1.0 - m) * std::pow(1.0 - r * r, m - 2);
    }
  } else {
    Rule1D v_rule = gauss_legendre(nr, 1.0, 1.0 / (1.0 - r_max * r_max));
    radial.nodes.resize(nr);
    radial_w.resize(nr);
    for (int j = 0; j < nr; ++j) {
      radial.nodes[j] = std::sqrt(1.0 - 1.0 / v_rule.nodes[j]);
      radial_w[j] = 0.5 * v_rule.weights[j];
    }
  }
  g->radial_nodes = radial.nodes;
  g->nodes.resize(static_cast<std::size_t>(nr) * ntheta);
  g->weights.resize(g->nodes.size());
  const double dtheta = 2.0 * pi / ntheta;
  for (int j = 0; j < nr; ++j) {
    double w = radial_w[j] * dtheta;
    for (int l = 0; l < ntheta; ++l) {
      g->nodes[static_cast<std::size_t>(j) * ntheta + l] = std::polar(radial.nodes[j], dtheta * l);
      g->weights[static_cast<std::size_t>(j) * ntheta + l] = w;
    }
  }

  double rm2 = r_max * r_max;
  g->stated_mass = (law == DiskLaw::invariant)
                       ? pi * rm2 / (1.0 - rm2)
                       : pi * std::pow(4.0, 1.0 - m) * (1.0 - std::pow(1.0 - rm2, m - 1)) / (m - 1);
  double qmass = 0.0;
  for (double w : g->weights) qmass += w;
  check_mass(*g, qmass);
  return g;
}

GridPtr plane_grid(int n) {
  if (n < 8) throw error(errc::invalid_input, "plane_grid: N must be >= 8");
  auto g = std::make_shared<Grid>();
  g->domain = Domain::plane;
  g->law = Law::plane_gaussian;
  g->n1 = n;
  g->n2 = n;
  Rule1D gh = gauss_hermite(n);
  g->nodes.resize(static_cast<std::size_t>(n) * n);
  g->weights.resize(g->nodes.size());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      g->nodes[static_cast<std::size_t>(j) * n + k] = cplx(gh.nodes[j], gh.nodes[k]);
      g->weights[static_cast<std::size_t>(j) * n + k] = gh.weights[j] * gh.weights[k];
    }
  g->stated_mass = pi;
  double qmass = 0.0;
  for (double w : g->weights) qmass += w;
  check_mass(*g, qmass);
  return g;
}

GridPtr line_grid(int n) {
  if (n < 8) throw error(errc::invalid_input, "line_grid: N must be >= 8");
  auto g = std::make_shared<Grid>();
  g->domain = Domain::line;
  g->law = Law::line_absorbed;
  g->n1 = n;
  Rule1D gh = gauss_hermite(n);
  g->nodes.resize(n);
  g->weights.resize(n);
  for (int k = 0; k < n; ++k) {
    g->nodes[k] = gh.nodes[k];
    g->weights[k] = gh.weights[k] * std::exp(gh.nodes[k] * gh.nodes[k]);
  }
  // The Lebesgue mass is infinite; the defining witness is the absorbed
  // Gaussian: sum w_k e^{-x_k^2} = sqrt(pi).
  double witness = 0.0;
  for (int k = 0; k < n; ++k) witness += gh.weights[k];
  g->stated_mass = std::sqrt(pi);
  if (std::abs(witness - g->stated_mass) > 1e-10)
    throw error(errc::numerical, "line_grid: Gauss-Hermite mass check failed");
  return g;
}

cplx integrate(const Grid& grid, const std::vector<cplx>& values) {
  if (values.size() != grid.size())
    throw error(errc::grid_mismatch, "integrate: value count does not match grid");
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < values.size(); ++k) acc += grid.weights[k] * values[k];
  return acc;
}

} // namespace cohana::grids
