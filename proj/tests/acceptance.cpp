// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cohana/cstrans.hpp"
#include "cohana/errors.hpp"
#include "cohana/grids.hpp"
#include "cohana/groups.hpp"
#include "cohana/ncpoly.hpp"
#include "cohana/opcalc.hpp"
#include "cohana/qplane.hpp"
#include "cohana/reps.hpp"
#include "cohana/serialize.hpp"
#include "cohana/verify.hpp"
#include "cohana/weyl.hpp"

using namespace cohana;
using groups::Heis;
using groups::Su11;
using cplx = std::complex<double>;

namespace {
const double pi = std::numbers::pi;
int failures = 0;

void report(int index, const std::string& name, bool pass, double worst, double tol) {
  std::printf("[%s] %2d. %-46s residual %.3e  tolerance %.1e\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), worst, tol);
  if (!pass) ++failures;
}

struct Rng {
  std::mt19937_64 gen{987654321u};
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  cplx disk_point(double rmax) {
    return std::polar(rmax * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * pi));
  }
  cplx box_point(double s) { return cplx(uniform(-s, s), uniform(-s, s)); }
  Su11 su11(double rmax) {
    return groups::su11_mul(groups::su11_section(disk_point(rmax)),
                            Su11::rotation(uniform(-pi, pi)));
  }
  Heis heis() { return Heis(uniform(-1.5, 1.5), box_point(1.0)); }
};

grids::SampledFunction circle_mode(const cstrans::Theory& th, int k) {
  if (k >= 0)
    return grids::make_sampled(
        th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(fn::Polynomial::monomial(k))));
  return grids::make_sampled(
      th.x_grid,
      fn::ClosedForm(fn::RationalFn(fn::Polynomial::constant(1.0), fn::Polynomial::monomial(-k))));
}

double l2_diff(const grids::SampledFunction& a, const std::vector<cplx>& b) {
  std::vector<cplx> diff(a.values.size());
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = a.values[k] - b[k];
  return grids::norm_l2(grids::make_sampled(a.grid, diff));
}

// 1. Heisenberg: the commutation identity and associativity
void criterion_weyl_relation() {
  Heis lhs = groups::heis_mul(Heis(0.0, cplx(1.0, 0.0)), Heis(0.0, cplx(0.0, 1.0)));
  Heis rhs = groups::heis_mul(groups::heis_mul(Heis(1.0, cplx(0.0, 0.0)), Heis(0.0, cplx(0.0, 1.0))),
                              Heis(0.0, cplx(1.0, 0.0)));
  double worst = std::max(groups::heis_distance(lhs, Heis(0.5, cplx(1.0, 1.0))),
                          groups::heis_distance(rhs, Heis(0.5, cplx(1.0, 1.0))));
  bool pass = worst <= 1e-15;

  Rng rng;
  double assoc = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Heis g1 = rng.heis(), g2 = rng.heis(), g3 = rng.heis();
    assoc = std::max(assoc,
                     groups::heis_distance(groups::heis_mul(groups::heis_mul(g1, g2), g3),
                                           groups::heis_mul(g1, groups::heis_mul(g2, g3))));
  }
  pass = pass && assoc <= 1e-13;
  report(1, "heisenberg commutation + associativity", pass, std::max(worst, assoc), 1e-13);
}

// 2. Hardy / Cauchy: analytic extension of Fourier modes
void criterion_hardy_extension() {
  auto th = cstrans::make_hardy(256);
  Rng rng;
  double worst = 0.0;
  for (int n = 0; n <= 16; ++n) {
    auto ext = cstrans::analytic_extension(th, circle_mode(th, n));
    for (int i = 0; i < 20; ++i) {
      cplx a = std::polar(0.9 * std::sqrt(rng.uniform(0.0, 1.0)), rng.uniform(0.0, 2.0 * pi));
      worst = std::max(worst, std::abs(ext(a) - std::pow(a, n)));
    }
  }
  bool pass = worst <= 1e-8;
  double anti = 0.0;
  for (int n : {-1, -2, -5}) {
    auto fhat = cstrans::reduced_transform(th, circle_mode(th, n));
    for (const cplx& v : fhat.values) anti = std::max(anti, std::abs(v));
  }
  pass = pass && anti <= 1e-10;
  report(2, "hardy extension e^{in phi} -> a^n", pass, std::max(worst, anti), 1e-8);
}

// 3. Szego projection: mode truncation, idempotent, self-adjoint
void criterion_szego() {
  auto th = cstrans::make_hardy(256);
  double mode_worst = 0.0;
  for (int n = -8; n <= 8; ++n) {
    auto f = circle_mode(th, n);
    auto p = cstrans::project(th, f);
    for (std::size_t k = 0; k < p.values.size(); ++k) {
      cplx want = n >= 0 ? f.values[k] : cplx{0.0, 0.0};
      mode_worst = std::max(mode_worst, std::abs(p.values[k] - want));
    }
  }
  Rng rng;
  std::vector<cplx> fv(th.x_grid->size()), gv(th.x_grid->size());
  for (std::size_t k = 0; k < fv.size(); ++k) {
    fv[k] = rng.box_point(1.0);
    gv[k] = rng.box_point(1.0);
  }
  auto f = grids::make_sampled(th.x_grid, fv);
  auto g = grids::make_sampled(th.x_grid, gv);
  auto pf = cstrans::project(th, f);
  auto pg = cstrans::project(th, g);
  auto ppf = cstrans::project(th, grids::make_sampled(th.x_grid, pf.values));
  double idem = l2_diff(ppf, pf.values);
  double selfadj = std::abs(grids::inner_product(pf, g) - grids::inner_product(f, pg));
  bool pass = mode_worst <= 1e-12 && idem <= 1e-8 && selfadj <= 1e-8;
  report(3, "szego projection (modes, P^2=P, P*=P)", pass,
         std::max({mode_worst, idem, selfadj}), 1e-8);
}

// 4. Bergman m = 2..5 round trips and the anti-analytic kill
void criterion_bergman() {
  double worst = 0.0;
  for (int m = 2; m <= 5; ++m) {
    auto th = cstrans::make_bergman(m, 64, 256);
    for (int n = 0; n <= 8; ++n) {
      auto f = grids::make_sampled(
          th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(fn::Polynomial::monomial(n))));
      auto round = cstrans::inverse_transform(th, cstrans::reduced_transform(th, f));
      worst = std::max(worst, l2_diff(round, f.values));
    }
  }
  bool pass = worst <= 1e-6;

  auto th2 = cstrans::make_bergman(2, 64, 256);
  std::vector<cplx> wbar(th2.x_grid->size());
  for (std::size_t k = 0; k < wbar.size(); ++k) wbar[k] = std::conj(th2.x_grid->nodes[k]);
  auto p = cstrans::project(th2, grids::make_sampled(th2.x_grid, std::move(wbar)));
  double kill = 0.0;
  for (const cplx& v : p.values) kill = std::max(kill, std::abs(v));
  pass = pass && kill <= 1e-8;
  report(4, "bergman round trips m=2..5 + kills conj(w)", pass, std::max(worst, kill), 1e-6);
}

// 5. Segal-Bargmann: monomial images, kernel, annihilator, projection
void criterion_segal_bargmann() {
  auto th = cstrans::make_segal_bargmann(128, 64);
  // Hermite -> z^n with cross-term leakage below 1e-8
  double leak = 0.0;
  for (int n = 0; n <= 6; ++n) {
    auto fhat = cstrans::reduced_transform(
        th, grids::make_sampled(th.x_grid, fn::ClosedForm(fn::hermite_function(n))));
    // scaled coefficients in the Gaussian-weighted monomial basis
    for (int k = 0; k <= 8; ++k) {
      cplx acc{0.0, 0.0};
      double kfact = 1.0;
      for (int j = 2; j <= k; ++j) kfact *= j;
      for (std::size_t idx = 0; idx < th.omega_grid->size(); ++idx) {
        cplx z = th.omega_grid->nodes[idx];
        cplx scaled = fhat.values[idx] * std::exp(0.5 * std::norm(z));
        acc += th.omega_grid->weights[idx] * scaled * std::pow(std::conj(z), k);
      }
      acc /= pi * kfact;
      if (k != n) leak = std::max(leak, std::abs(acc));
    }
  }
  bool pass = leak <= 1e-8;

  Rng rng;
  double kgap = 0.0;
  for (int i = 0; i < 20; ++i) {
    cplx z = rng.box_point(1.5), w = rng.box_point(1.5);
    kgap = std::max(kgap, std::abs(cstrans::kernel(th, z, w) -
                                   std::exp(-std::norm(z) + w * std::conj(z))));
  }
  pass = pass && kgap <= 1e-12;

  fn::PlaneGaussFn f0hat;
  f0hat.p = fn::Poly2::constant(1.0);
  auto cr = cstrans::cr_residual(
      th, grids::make_sampled(th.omega_grid, fn::ClosedForm(f0hat)), 1e-3);
  pass = pass && cr.residual <= 1e-6;

  double proj = 0.0;
  for (int n = 0; n <= 4; ++n) {
    auto f = grids::make_sampled(th.x_grid, fn::ClosedForm(fn::hermite_function(n)));
    auto p = cstrans::project(th, f);
    proj = std::max(proj, l2_diff(p, f.values));
  }
  pass = pass && proj <= 1e-8;
  report(5, "segal-bargmann transform/kernel/annihilator", pass,
         std::max({leak, kgap, cr.residual, proj}), 1e-6);
}

// 6. intertwining and unitarity across the three theories
void criterion_intertwining() {
  Rng rng;
  double wavelet_worst = 0.0, reduced_worst = 0.0, unitary_worst = 0.0;

  std::vector<cstrans::Theory> theories;
  theories.push_back(cstrans::make_hardy());
  theories.push_back(cstrans::make_bergman(2));
  theories.push_back(cstrans::make_segal_bargmann());

  for (const auto& th : theories) {
    const bool sb = th.kind == cstrans::TheoryKind::segal_bargmann;
    grids::SampledFunction f;
    if (sb) {
      fn::GaussHermiteFn mix;
      mix.p = fn::hermite_function(1).p + cplx(0.5, 0.2) * fn::hermite_function(3).p;
      f = grids::make_sampled(th.x_grid, fn::ClosedForm(mix));
    } else {
      f = grids::make_sampled(
          th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(
                         fn::Polynomial(std::vector<cplx>{0.3, cplx(2.0, 0.0), 0.0, cplx(0.0, 1.0)}))));
    }

    for (int i = 0; i < 10; ++i) {
      cstrans::GroupElement g =
          sb ? cstrans::GroupElement(rng.heis()) : cstrans::GroupElement(rng.su11(0.5));
      cstrans::GroupElement gp =
          sb ? cstrans::GroupElement(rng.heis()) : cstrans::GroupElement(rng.su11(0.5));

      cstrans::GroupElement ginv_gp =
          sb ? cstrans::GroupElement(groups::heis_mul(groups::heis_inverse(std::get<Heis>(g)),
                                                      std::get<Heis>(gp)))
             : cstrans::GroupElement(groups::su11_mul(groups::su11_inverse(std::get<Su11>(g)),
                                                      std::get<Su11>(gp)));
      cplx lhs = cstrans::wavelet_full(th, f, ginv_gp);
      cplx rhs = cstrans::wavelet_full(th, reps::apply(th.rep, g, f), gp);
      wavelet_worst = std::max(wavelet_worst, std::abs(lhs - rhs));

      auto rho_cf = cstrans::apply_rho(th, g, cstrans::reduced_transform(th, f));
      auto c_pif = cstrans::reduced_transform(th, reps::apply(th.rep, g, f));
      double cap = sb ? 2.5 : 0.8;
      for (std::size_t k = 0; k < rho_cf.values.size(); ++k) {
        if (std::abs(th.omega_grid->nodes[k]) > cap) continue;
        reduced_worst = std::max(reduced_worst, std::abs(rho_cf.values[k] - c_pif.values[k]));
      }

      std::vector<grids::SampledFunction> basis;
      for (int b = 0; b < 4; ++b)
        basis.push_back(sb ? grids::make_sampled(th.x_grid,
                                                 fn::ClosedForm(fn::hermite_function(b)))
                           : grids::make_sampled(th.x_grid,
                                                 fn::ClosedForm(fn::RationalFn::from_poly(
                                                     fn::Polynomial::monomial(b)))));
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b)
          unitary_worst =
              std::max(unitary_worst, reps::unitarity_residual(th.rep, g, basis[a], basis[b]));
    }
  }
  bool pass = wavelet_worst <= 1e-8 && reduced_worst <= 1e-6 && unitary_worst <= 1e-6;
  report(6, "intertwining (wavelet, reduced) + unitarity", pass,
         std::max({wavelet_worst, reduced_worst, unitary_worst}), 1e-6);
}

// 7. contour functional calculus
void criterion_functional_calculus() {
  Rng rng;
  double poly_worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    int dim = 2 + static_cast<int>(rng.uniform(0.0, 2.999));
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = rng.box_point(1.0);
    opcalc::CMatrix raw = opcalc::make_cmatrix(m);
    opcalc::CMatrix t =
        opcalc::make_cmatrix(m * (0.8 * rng.uniform(0.4, 1.0) / std::max(1e-9, raw.norm_bound)));
    std::vector<cplx> coeffs(9);
    for (auto& c : coeffs) c = rng.box_point(1.0);
    auto f = opcalc::boundary_from_rational(fn::RationalFn::from_poly(fn::Polynomial(coeffs)));
    Eigen::MatrixXcd direct = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd tk = Eigen::MatrixXcd::Identity(dim, dim);
    for (const cplx& c : coeffs) {
      direct += c * tk;
      tk = tk * t.mat;
    }
    poly_worst = std::max(poly_worst,
                          (opcalc::riesz_dunford_contour(f, t, 512) - direct).norm());
  }
  bool pass = poly_worst <= 1e-8;

  // image of 1 is the identity
  Eigen::MatrixXcd m2(2, 2);
  m2 << cplx(0.2, 0.1), cplx(0.0, 0.4), cplx(-0.3, 0.0), cplx(0.1, -0.2);
  opcalc::CMatrix t2 = opcalc::make_cmatrix(0.8 * m2);
  auto one = opcalc::boundary_from_fourier({{0, cplx(1.0, 0.0)}});
  double unit_gap =
      (opcalc::riesz_dunford_contour(one, t2, 512) - Eigen::MatrixXcd::Identity(2, 2)).norm();
  pass = pass && unit_gap <= 1e-12;

  double inter_worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    Eigen::MatrixXcd m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = rng.box_point(1.0);
    opcalc::CMatrix raw = opcalc::make_cmatrix(m);
    opcalc::CMatrix t = opcalc::make_cmatrix(m * (0.6 / std::max(1e-9, raw.norm_bound)));
    auto f = opcalc::boundary_from_fourier({{1, cplx(1.0, 0.0)}, {2, cplx(0.3, 0.1)}});
    inter_worst =
        std::max(inter_worst, opcalc::intertwine_residual(f, rng.su11(0.4), t, 512));
  }
  pass = pass && inter_worst <= 1e-6;

  // divergence witness of the disk form
  auto grid = grids::disk_grid(64, 64, grids::DiskLaw::weighted, 1.0, 2);
  auto d09 = opcalc::riesz_dunford_disk(one, t2, 0.9, *grid);
  auto d095 = opcalc::riesz_dunford_disk(one, t2, 0.95, *grid);
  pass = pass && d095.drift > d09.drift && d09.divergence_flag;
  report(7, "riesz-dunford contour calculus + disk witness", pass,
         std::max({poly_worst, unit_gap, inter_worst}), 1e-6);
}

// 8. Weyl calculus
void criterion_weyl_calculus() {
  Rng rng;
  Eigen::MatrixXcd sx(2, 2), sy(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;

  Eigen::MatrixXcd t1(2, 2), t2(2, 2);
  t1 << 0.3, cplx(0.1, 0.2), cplx(0.1, -0.2), -0.4;
  t2 << -0.2, cplx(0.0, 0.5), cplx(0.0, -0.5), 0.1;
  auto p12 = opcalc::CommutativePoly::monomial(2, {1, 1});
  double exact_gap =
      (opcalc::weyl_poly(p12, {opcalc::make_cmatrix(t1), opcalc::make_cmatrix(t2)}) -
       0.5 * (t1 * t2 + t2 * t1))
          .norm();
  double pauli_gap =
      opcalc::weyl_poly(p12, {opcalc::make_cmatrix(sx), opcalc::make_cmatrix(sy)}).norm();
  bool pass = exact_gap <= 1e-15 && pauli_gap <= 1e-14;

  // commuting pair: integral form against the joint spectrum
  auto plane = grids::plane_grid(48);
  Eigen::MatrixXcd d1 = Eigen::MatrixXcd::Zero(3, 3), d2 = Eigen::MatrixXcd::Zero(3, 3);
  for (int i = 0; i < 3; ++i) {
    d1(i, i) = rng.uniform(-1.2, 1.2);
    d2(i, i) = rng.uniform(-1.2, 1.2);
  }
  opcalc::WeylFunction gauss =
      opcalc::weyl_gaussian(Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(2));
  Eigen::MatrixXcd img =
      opcalc::weyl_integral(gauss, {opcalc::make_cmatrix(d1), opcalc::make_cmatrix(d2)}, *plane);
  double joint_gap = 0.0;
  for (int i = 0; i < 3; ++i) {
    cplx want = std::exp(-0.5 * (std::norm(d1(i, i)) + std::norm(d2(i, i))));
    joint_gap = std::max(joint_gap, std::abs(img(i, i) - want));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) joint_gap = std::max(joint_gap, std::abs(img(i, j)));
  pass = pass && joint_gap <= 1e-6;

  // affine covariance over random nonsingular maps
  double affine_worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXcd a(3, 3), b(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        a(r, c) = 0.4 * rng.box_point(1.0);
        b(r, c) = 0.4 * rng.box_point(1.0);
      }
    a = (0.5 * (a + a.adjoint())).eval();
    b = (0.5 * (b + b.adjoint())).eval();
    Eigen::Matrix2d m;
    do {
      m << rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2),
          rng.uniform(-1.2, 1.2);
    } while (std::abs(m.determinant()) < 0.3);
    Eigen::MatrixXcd s1 = m(0, 0) * a + m(0, 1) * b;
    Eigen::MatrixXcd s2 = m(1, 0) * a + m(1, 1) * b;
    opcalc::WeylFunction g = opcalc::weyl_gaussian(m.transpose() * m, Eigen::VectorXd::Zero(2));
    Eigen::MatrixXcd lhs = opcalc::weyl_integral(
        gauss, {opcalc::make_cmatrix(s1), opcalc::make_cmatrix(s2)}, *plane);
    Eigen::MatrixXcd rhs =
        opcalc::weyl_integral(g, {opcalc::make_cmatrix(a), opcalc::make_cmatrix(b)}, *plane);
    affine_worst = std::max(affine_worst, (lhs - rhs).norm());
  }
  pass = pass && affine_worst <= 1e-6;
  report(8, "weyl calculus (symmetrization, joint, affine)", pass,
         std::max({exact_gap, pauli_gap, joint_gap, affine_worst}), 1e-6);
}

// 9. quantum plane
void criterion_quantum_plane() {
  qplane::Mq2Report rep = qplane::verify_mq2();
  bool pass = rep.forward_zero && rep.converse_matches && rep.extracted_relations.size() == 6;

  double clock_worst = 0.0;
  for (int n = 2; n <= 8; ++n)
    clock_worst = std::max(clock_worst, qplane::clock_shift(n).residual);
  pass = pass && clock_worst <= 1e-14;

  Rng rng;
  qplane::RelationSet manin = qplane::manin_relations();
  qplane::NCPoly rel = qplane::parse_nc("x*y - q*y*x");
  double eval_worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    auto rand_word = [&] {
      qplane::NCPoly p = qplane::NCPoly::one();
      int len = static_cast<int>(rng.uniform(0.0, 2.999));
      for (int l = 0; l < len; ++l)
        p = p * qplane::NCPoly::symbol(rng.uniform(0.0, 1.0) < 0.5 ? qplane::Symbol::x
                                                                   : qplane::Symbol::y);
      return p;
    };
    qplane::NCPoly identity = rand_word() * rel * rand_word();
    qplane::NCPoly reduced = qplane::normal_order(identity, manin);
    reduced.cleanup();
    if (!reduced.is_zero()) {
      eval_worst = 1.0;
      break;
    }
    for (int n : {2, 3, 5}) {
      qplane::ClockShift cs = qplane::clock_shift(n);
      std::map<qplane::Symbol, Eigen::MatrixXcd> subst{{qplane::Symbol::x, cs.X},
                                                       {qplane::Symbol::y, cs.Y}};
      eval_worst = std::max(eval_worst, identity.eval(subst, cs.q).cwiseAbs().maxCoeff());
    }
  }
  pass = pass && eval_worst <= 1e-12;
  report(9, "quantum plane (mq2, clock-shift, evaluation)", pass,
         std::max(clock_worst, eval_worst), 1e-12);
}

// 10. CLI: verify all exits 0 and reports are bitwise stable
void criterion_cli() {
  const char* cli = std::getenv("COHANA_CLI");
  if (!cli) {
    report(10, "cli verify-all reproducibility (COHANA_CLI unset)", false, 1.0, 0.5);
    return;
  }
  std::string base = "acceptance_cli_report";
  std::string cmd1 = std::string(cli) + " verify all --out " + base + "1.json 2>/dev/null";
  std::string cmd2 = std::string(cli) + " verify all --out " + base + "2.json 2>/dev/null";
  int rc1 = std::system(cmd1.c_str());
  int rc2 = std::system(cmd2.c_str());
  bool pass = rc1 == 0 && rc2 == 0;
  if (pass) {
    std::string a = io::read_file(base + "1.json");
    std::string b = io::read_file(base + "2.json");
    pass = !a.empty() && a == b;
  }
  report(10, "cli verify-all exits 0, bitwise stable", pass, pass ? 0.0 : 1.0, 0.5);
}

} // namespace

int main() {
  criterion_weyl_relation();
  criterion_hardy_extension();
  criterion_szego();
  criterion_bergman();
  criterion_segal_bargmann();
  criterion_intertwining();
  criterion_functional_calculus();
  criterion_weyl_calculus();
  criterion_quantum_plane();
  criterion_cli();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
