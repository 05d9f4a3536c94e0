#include "cohana/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cohana/cstrans.hpp"
#include "cohana/errors.hpp"
#include "cohana/functions.hpp"
#include "cohana/grids.hpp"
#include "cohana/groups.hpp"
#include "cohana/ncpoly.hpp"
#include "cohana/opcalc.hpp"
#include "cohana/qplane.hpp"
#include "cohana/reps.hpp"
#include "cohana/weyl.hpp"

namespace cohana::verify {

namespace {

using cplx = std::complex<double>;
using groups::Heis;
using groups::Su11;

const double pi = std::numbers::pi;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  cplx disk_point(double rmax) {
    double r = std::sqrt(uniform(0.0, rmax * rmax));
    return std::polar(r, uniform(0.0, 2.0 * pi));
  }
  cplx box_point(double s) { return cplx(uniform(-s, s), uniform(-s, s)); }
  Su11 su11(double rmax = 0.6) {
    return groups::su11_mul(groups::su11_section(disk_point(rmax)),
                            Su11::rotation(uniform(-pi, pi)));
  }
  Heis heis(double zmax = 1.0) { return Heis(uniform(-1.5, 1.5), box_point(zmax)); }
};

struct Collector {
  Report report;

  void add(const std::string& name, double residual, double tolerance,
           const std::string& counterexample = "") {
    Check c;
    c.name = name;
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = residual <= tolerance;
    if (!c.pass) c.counterexample = counterexample;
    report.checks.push_back(std::move(c));
  }
  void add_flag(const std::string& name, bool ok, const std::string& counterexample = "") {
    add(name, ok ? 0.0 : 1.0, 0.5, counterexample);
  }
};

std::string describe(const Su11& g) {
  std::ostringstream os;
  os << "alpha=(" << g.alpha.real() << "," << g.alpha.imag() << ") beta=(" << g.beta.real()
     << "," << g.beta.imag() << ")";
  return os.str();
}

std::string describe(const Heis& g) {
  std::ostringstream os;
  os << "t=" << g.t << " z=(" << g.z[0].real() << "," << g.z[0].imag() << ")";
  return os.str();
}

double sup_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s = std::max(s, std::abs(a[k] - b[k]));
  return s;
}

} // namespace

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

// ------------------------------------------------------------------ groups --

Report verify_groups(std::uint64_t seed) {
  Rng rng(seed);
  Collector out;
  out.report.suite = "groups";

  // Heisenberg associativity over random triples
  double worst = 0.0;
  std::string witness;
  for (int i = 0; i < 1000; ++i) {
    Heis g1 = rng.heis(), g2 = rng.heis(), g3 = rng.heis();
    double d = groups::heis_distance(groups::heis_mul(groups::heis_mul(g1, g2), g3),
                                     groups::heis_mul(g1, groups::heis_mul(g2, g3)));
    if (d > worst) {
      worst = d;
      witness = describe(g1) + " | " + describe(g2) + " | " + describe(g3);
    }
  }
  out.add("heisenberg-associativity", worst, 1e-13, witness);

  // integrated commutation relation, n = 1
  Heis lhs = groups::heis_mul(Heis(0.0, cplx(1.0, 0.0)), Heis(0.0, cplx(0.0, 1.0)));
  Heis rhs = groups::heis_mul(groups::heis_mul(Heis(1.0, 0.0), Heis(0.0, cplx(0.0, 1.0))),
                              Heis(0.0, cplx(1.0, 0.0)));
  double weyl_gap = std::max(groups::heis_distance(lhs, rhs),
                             groups::heis_distance(lhs, Heis(0.5, cplx(1.0, 1.0))));
  out.add("weyl-commutation-relation", weyl_gap, 1e-15);

  // decomposition round trip
  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Su11 g = rng.su11(0.9);
    auto d = groups::su11_decompose(g);
    Su11 back = groups::su11_mul(groups::su11_section(d.a), Su11::rotation(d.psi));
    double gap = groups::su11_distance(back, g);
    if (gap > worst) {
      worst = gap;
      witness = describe(g);
    }
  }
  out.add("su11-decomposition-roundtrip", worst, 1e-12, witness);

  // composition law of the disk action; the g^{-1} parameterization makes
  // mobius(g1 g2, .) = mobius(g2, .) o mobius(g1, .)
  worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Su11 g1 = rng.su11(), g2 = rng.su11();
    cplx z = rng.disk_point(0.9);
    cplx a = groups::mobius_disk(groups::su11_mul(g1, g2), z);
    cplx b = groups::mobius_disk(g2, groups::mobius_disk(g1, z));
    double gap = std::abs(a - b);
    if (gap > worst) {
      worst = gap;
      witness = describe(g1) + " | " + describe(g2);
    }
  }
  out.add("mobius-composition-law", worst, 1e-11, witness);

  // the three orbits are invariant
  bool orbits_ok = true;
  std::string orbit_witness;
  for (int i = 0; i < 100; ++i) {
    Su11 g = rng.su11();
    cplx inside = rng.disk_point(0.95);
    cplx boundary = std::polar(1.0, rng.uniform(0.0, 2.0 * pi));
    cplx outside = std::polar(rng.uniform(1.1, 3.0), rng.uniform(0.0, 2.0 * pi));
    if (groups::orbit_classify(groups::mobius_disk(g, inside)) != groups::Orbit::disk ||
        groups::orbit_classify(groups::mobius_disk(g, boundary)) != groups::Orbit::circle ||
        groups::orbit_classify(groups::mobius_disk(g, outside)) != groups::Orbit::exterior) {
      orbits_ok = false;
      orbit_witness = describe(g);
      break;
    }
  }
  out.add_flag("orbit-preservation", orbits_ok, orbit_witness);

  // reduction is a homomorphism onto the coset group
  worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Heis g1 = rng.heis(), g2 = rng.heis();
    Heis a = groups::heis_reduce(groups::heis_mul(g1, g2));
    Heis b = groups::heis_reduce(groups::heis_mul(groups::heis_reduce(g1), groups::heis_reduce(g2)));
    worst = std::max(worst, groups::heis_distance(a, b));
  }
  out.add("heis-reduce-homomorphism", worst, 1e-12);

  return out.report;
}

// -------------------------------------------------------------------- reps --

namespace {

std::vector<grids::SampledFunction> canonical_basis(const cstrans::Theory& th, int count) {
  std::vector<grids::SampledFunction> basis;
  for (int k = 0; k < count; ++k) {
    if (th.kind == cstrans::TheoryKind::segal_bargmann) {
      basis.push_back(grids::make_sampled(th.x_grid, fn::ClosedForm(fn::hermite_function(k))));
    } else {
      basis.push_back(grids::make_sampled(
          th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(fn::Polynomial::monomial(k)))));
    }
  }
  return basis;
}

cstrans::GroupElement random_element(Rng& rng, const cstrans::Theory& th) {
  if (th.kind == cstrans::TheoryKind::segal_bargmann)
    return cstrans::GroupElement(rng.heis());
  return cstrans::GroupElement(rng.su11(0.5));
}

std::string describe_element(const cstrans::GroupElement& g) {
  if (const auto* s = std::get_if<Su11>(&g)) return describe(*s);
  return describe(std::get<Heis>(g));
}

cstrans::GroupElement element_mul(const cstrans::GroupElement& a, const cstrans::GroupElement& b) {
  if (const auto* s = std::get_if<Su11>(&a))
    return cstrans::GroupElement(groups::su11_mul(*s, std::get<Su11>(b)));
  return cstrans::GroupElement(groups::heis_mul(std::get<Heis>(a), std::get<Heis>(b)));
}

cstrans::GroupElement element_inv(const cstrans::GroupElement& a) {
  if (const auto* s = std::get_if<Su11>(&a)) return cstrans::GroupElement(groups::su11_inverse(*s));
  return cstrans::GroupElement(groups::heis_inverse(std::get<Heis>(a)));
}

grids::SampledFunction test_function(const cstrans::Theory& th) {
  if (th.kind == cstrans::TheoryKind::segal_bargmann) {
    fn::GaussHermiteFn h1 = fn::hermite_function(1);
    fn::GaussHermiteFn h3 = fn::hermite_function(3);
    fn::GaussHermiteFn mix;
    mix.p = h1.p + cplx(0.5, 0.2) * h3.p;
    return grids::make_sampled(th.x_grid, fn::ClosedForm(mix));
  }
  fn::Polynomial p(std::vector<cplx>{cplx(0.3, 0.0), cplx(2.0, 0.0), 0.0, cplx(0.0, 1.0)});
  return grids::make_sampled(th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(p)));
}

} // namespace

Report verify_reps(std::uint64_t seed) {
  Rng rng(seed);
  Collector out;
  out.report.suite = "reps";

  std::vector<cstrans::Theory> theories;
  theories.push_back(cstrans::make_hardy());
  theories.push_back(cstrans::make_bergman(2));
  theories.push_back(cstrans::make_segal_bargmann());

  for (const auto& th : theories) {
    const std::string tag = th.name();
    grids::SampledFunction f = test_function(th);

    // homomorphism
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < 10; ++i) {
      cstrans::GroupElement g1 = random_element(rng, th), g2 = random_element(rng, th);
      auto lhs = reps::apply(th.rep, g1, reps::apply(th.rep, g2, f));
      auto rhs = reps::apply(th.rep, element_mul(g1, g2), f);
      double gap = sup_diff(lhs.values, rhs.values);
      if (gap > worst) {
        worst = gap;
        witness = describe_element(g1) + " | " + describe_element(g2);
      }
    }
    out.add(tag + ":homomorphism", worst, 1e-10, witness);

    // unitarity on the canonical basis
    auto basis = canonical_basis(th, 5);
    worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      cstrans::GroupElement g = random_element(rng, th);
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
          double gap = reps::unitarity_residual(th.rep, g, basis[a], basis[b]);
          if (gap > worst) {
            worst = gap;
            witness = describe_element(g);
          }
        }
    }
    out.add(tag + ":unitarity", worst, 1e-6, witness);

    // vacuum eigen-relation
    worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      cstrans::GroupElement h =
          th.kind == cstrans::TheoryKind::segal_bargmann
              ? cstrans::GroupElement(Heis(rng.uniform(-2.0, 2.0), cplx(0.0, 0.0)))
              : cstrans::GroupElement(Su11::rotation(rng.uniform(-pi, pi)));
      cplx chi = reps::vacuum_character(th.rep, h);
      auto moved = reps::apply(th.rep, h, th.vacuum);
      std::vector<cplx> scaled(th.vacuum.values.size());
      for (std::size_t k = 0; k < scaled.size(); ++k) scaled[k] = chi * th.vacuum.values[k];
      double gap = sup_diff(moved.values, scaled);
      worst = std::max(worst, gap);
      worst = std::max(worst, std::abs(std::abs(chi) - 1.0));
    }
    out.add(tag + ":vacuum-eigenrelation", worst, 1e-12);
  }

  return out.report;
}

// ----------------------------------------------------------------- cstrans --

Report verify_cstrans(std::uint64_t seed) {
  Rng rng(seed);
  Collector out;
  out.report.suite = "cstrans";

  std::vector<cstrans::Theory> theories;
  theories.push_back(cstrans::make_hardy());
  theories.push_back(cstrans::make_bergman(2));
  theories.push_back(cstrans::make_segal_bargmann());

  for (const auto& th : theories) {
    const std::string tag = th.name();

    // F o C = identity on the first 8 canonical basis functions (not Hardy)
    if (th.kind != cstrans::TheoryKind::hardy) {
      double worst = 0.0;
      auto basis = canonical_basis(th, 8);
      for (const auto& b : basis) {
        auto round = cstrans::inverse_transform(th, cstrans::reduced_transform(th, b));
        std::vector<cplx> diff(b.values.size());
        for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = round.values[k] - b.values[k];
        worst = std::max(worst, grids::norm_l2(grids::make_sampled(th.x_grid, diff)));
      }
      out.add(tag + ":inverse-of-transform", worst, 1e-6);
    }

    // projection: idempotent and self-adjoint on random data (the line theory
    // uses smooth Hermite mixtures, pointwise noise is not in its function class)
    {
      grids::SampledFunction f, g;
      if (th.kind == cstrans::TheoryKind::segal_bargmann) {
        fn::GaussHermiteFn mixf, mixg;
        mixf.p = fn::hermite_function(0).p + cplx(0.4, 0.7) * fn::hermite_function(2).p;
        mixg.p = cplx(0.0, 1.0) * fn::hermite_function(0).p +
                 cplx(0.9, -0.2) * fn::hermite_function(3).p;
        f = grids::make_sampled(th.x_grid, fn::ClosedForm(mixf));
        g = grids::make_sampled(th.x_grid, fn::ClosedForm(mixg));
      } else {
        std::vector<cplx> fv(th.x_grid->size()), gv(th.x_grid->size());
        for (std::size_t k = 0; k < fv.size(); ++k) {
          fv[k] = rng.box_point(1.0);
          gv[k] = rng.box_point(1.0);
        }
        f = grids::make_sampled(th.x_grid, std::move(fv));
        g = grids::make_sampled(th.x_grid, std::move(gv));
      }
      auto pf = cstrans::project(th, f);
      auto pg = cstrans::project(th, g);
      auto ppf = cstrans::project(th, grids::make_sampled(th.x_grid, pf.values));
      std::vector<cplx> diff(pf.values.size());
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = ppf.values[k] - pf.values[k];
      double idem = grids::norm_l2(grids::make_sampled(th.x_grid, diff));
      double selfadj = std::abs(grids::inner_product(pf, g) - grids::inner_product(f, pg));
      out.add(tag + ":projection-idempotent", idem, 1e-8);
      out.add(tag + ":projection-self-adjoint", selfadj, 1e-8);
    }

    // wavelet intertwining: Wf(g^{-1} g') = (W pi_g f)(g')
    {
      double worst = 0.0;
      std::string witness;
      grids::SampledFunction f = test_function(th);
      for (int i = 0; i < 5; ++i) {
        cstrans::GroupElement g = random_element(rng, th), gp = random_element(rng, th);
        cplx lhs = cstrans::wavelet_full(th, f, element_mul(element_inv(g), gp));
        cplx rhs = cstrans::wavelet_full(th, reps::apply(th.rep, g, f), gp);
        double gap = std::abs(lhs - rhs);
        if (gap > worst) {
          worst = gap;
          witness = describe_element(g) + " | " + describe_element(gp);
        }
      }
      out.add(tag + ":wavelet-intertwining", worst, 1e-8, witness);
    }

    // reduced intertwining rho C = C pi at the Omega nodes
    {
      double worst = 0.0;
      std::string witness;
      grids::SampledFunction f = test_function(th);
      for (int i = 0; i < 10; ++i) {
        cstrans::GroupElement g = random_element(rng, th);
        auto lhs = cstrans::apply_rho(th, g, cstrans::reduced_transform(th, f));
        auto rhs = cstrans::reduced_transform(th, reps::apply(th.rep, g, f));
        double cap = th.kind == cstrans::TheoryKind::segal_bargmann ? 2.5 : 0.8;
        double gap = 0.0;
        for (std::size_t k = 0; k < lhs.values.size(); ++k) {
          if (std::abs(th.omega_grid->nodes[k]) > cap) continue;
          gap = std::max(gap, std::abs(lhs.values[k] - rhs.values[k]));
        }
        if (gap > worst) {
          worst = gap;
          witness = describe_element(g);
        }
      }
      out.add(tag + ":reduced-intertwining", worst, 1e-6, witness);
    }
  }

  // Segal-Bargmann reduced-projection kernel is conjugate-symmetric
  {
    auto th = cstrans::make_segal_bargmann();
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      cplx z = rng.box_point(2.0), w = rng.box_point(2.0);
      worst = std::max(worst, std::abs(cstrans::projection_kernel(th, z, w) -
                                       std::conj(cstrans::projection_kernel(th, w, z))));
    }
    out.add("segal-bargmann:projection-kernel-symmetry", worst, 1e-14);
  }

  // Hardy projection acts mode-by-mode as the nonnegative truncation
  {
    auto th = cstrans::make_hardy(256);
    double worst = 0.0;
    for (int k = -8; k <= 8; ++k) {
      fn::RationalFn mode =
          k >= 0 ? fn::RationalFn::from_poly(fn::Polynomial::monomial(k))
                 : fn::RationalFn(fn::Polynomial::constant(1.0), fn::Polynomial::monomial(-k));
      auto f = grids::make_sampled(th.x_grid, fn::ClosedForm(mode));
      auto p = cstrans::project(th, f);
      for (std::size_t n = 0; n < p.values.size(); ++n) {
        cplx want = k >= 0 ? f.values[n] : cplx{0.0, 0.0};
        worst = std::max(worst, std::abs(p.values[n] - want));
      }
    }
    out.add("hardy:projection-mode-truncation", worst, 1e-12);
  }

  return out.report;
}

// ------------------------------------------------------------------ qplane --

Report verify_qplane(std::uint64_t seed) {
  Rng rng(seed);
  Collector out;
  out.report.suite = "qplane";
  using namespace qplane;

  // rule sets construct (order + confluence checks run inside)
  bool construct_ok = true;
  std::string note;
  try {
    manin_relations();
    mq2_relations();
    mq2_full_relations();
  } catch (const error& e) {
    construct_ok = false;
    note = e.what();
  }
  out.add_flag("rewrite-systems-confluent", construct_ok, note);

  RelationSet manin = manin_relations();

  auto random_poly = [&](int terms) {
    NCPoly p;
    for (int t = 0; t < terms; ++t) {
      Word w;
      int len = static_cast<int>(rng.uniform(0.0, 3.999));
      for (int l = 0; l < len; ++l)
        w.push_back(rng.uniform(0.0, 1.0) < 0.5 ? Symbol::x : Symbol::y);
      p.add_term(w, LaurentQ::qpow(static_cast<int>(rng.uniform(-2.0, 2.999)),
                                   cplx(std::round(rng.uniform(-3.0, 3.0)), 0.0)));
    }
    p.cleanup();
    return p;
  };

  // idempotence and linearity of normal ordering
  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      NCPoly p = random_poly(4), r = random_poly(4);
      NCPoly np = normal_order(p, manin);
      NCPoly diff_idem = normal_order(np, manin) - np;
      diff_idem.cleanup();
      NCPoly diff_lin = normal_order(p + r, manin) - (normal_order(p, manin) + normal_order(r, manin));
      diff_lin.cleanup();
      NCPoly diff_mul =
          normal_order(p * r, manin) - normal_order(normal_order(p, manin) * normal_order(r, manin), manin);
      diff_mul.cleanup();
      ok = diff_idem.is_zero() && diff_lin.is_zero() && diff_mul.is_zero();
      if (!ok) note = print_nc(p) + " | " + print_nc(r);
    }
    out.add_flag("normal-order-idempotent-linear-multiplicative", ok, note);
  }

  // evaluation homomorphism on the clock-shift witnesses
  {
    double worst = 0.0;
    std::string witness;
    NCPoly manin_lhs = parse_nc("x*y - q*y*x");
    for (int i = 0; i < 50; ++i) {
      NCPoly left = random_poly(2), right = random_poly(2);
      NCPoly identity = left * manin_lhs * right;
      NCPoly reduced = normal_order(identity, manin);
      reduced.cleanup();
      if (!reduced.is_zero()) {
        worst = 1.0;
        witness = print_nc(identity);
        break;
      }
      for (int n : {2, 3, 5}) {
        ClockShift cs = clock_shift(n);
        std::map<Symbol, Eigen::MatrixXcd> subst{{Symbol::x, cs.X}, {Symbol::y, cs.Y}};
        double gap = identity.eval(subst, cs.q).cwiseAbs().maxCoeff();
        if (gap > worst) {
          worst = gap;
          witness = "n=" + std::to_string(n) + " " + print_nc(identity);
        }
      }
    }
    out.add("evaluation-homomorphism", worst, 1e-12, witness);
  }

  // parse/print round trip is a fixed point
  {
    bool ok = true;
    std::vector<std::string> sources{"x*y - q*y*x", "x^0", "(a+b)*(a-b)",
                                     "2.5i*x*y - q^-2*y^3", "1 + i - q*a*d"};
    for (int i = 0; i < 10; ++i) sources.push_back(print_nc(random_poly(4)));
    for (const auto& src : sources) {
      NCPoly p = parse_nc(src);
      std::string s1 = print_nc(p);
      std::string s2 = print_nc(parse_nc(s1));
      if (s1 != s2) {
        ok = false;
        note = src;
        break;
      }
    }
    out.add_flag("parse-print-fixed-point", ok, note);
  }

  // quantum-matrix verification
  {
    Mq2Report rep = verify_mq2();
    out.add_flag("mq2-forward-remainder-zero", rep.forward_zero,
                 rep.remainder_terms.empty() ? "" : rep.remainder_terms.front());
    out.add_flag("mq2-converse-six-relations",
                 rep.converse_matches && rep.extracted_relations.size() == 6);
    out.add_flag("mq2-commutative-limit", rep.commutative_limit);
  }

  // clock and shift residuals
  {
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) worst = std::max(worst, clock_shift(n).residual);
    out.add("clock-shift-relation", worst, 1e-14);
  }

  return out.report;
}

// ------------------------------------------------------------------ opcalc --

namespace {

opcalc::CMatrix random_contraction(Rng& rng, int dim, double target) {
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rng.box_point(1.0);
  opcalc::CMatrix raw = opcalc::make_cmatrix(m);
  double scale = target * rng.uniform(0.4, 1.0) / std::max(1e-12, raw.norm_bound);
  return opcalc::make_cmatrix(scale * m);
}

opcalc::BoundaryFunction random_analytic(Rng& rng, int degree) {
  std::vector<cplx> c(degree + 1);
  for (int k = 0; k <= degree; ++k) c[k] = rng.box_point(1.0) / (1.0 + k);
  return opcalc::boundary_from_rational(fn::RationalFn::from_poly(fn::Polynomial(std::move(c))));
}

Eigen::MatrixXcd poly_eval_matrix(const std::vector<cplx>& coeffs, const Eigen::MatrixXcd& t) {
  const int d = static_cast<int>(t.rows());
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd tk = Eigen::MatrixXcd::Identity(d, d);
  for (const cplx& c : coeffs) {
    acc += c * tk;
    tk = tk * t;
  }
  return acc;
}

} // namespace

Report verify_opcalc(std::uint64_t seed) {
  Rng rng(seed);
  Collector out;
  out.report.suite = "opcalc";

  // polynomial reproduction against direct evaluation
  {
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < 20; ++i) {
      int dim = 2 + static_cast<int>(rng.uniform(0.0, 2.999));
      opcalc::CMatrix t = random_contraction(rng, dim, 0.8);
      std::vector<cplx> coeffs(9);
      for (auto& c : coeffs) c = rng.box_point(1.0);
      auto f = opcalc::boundary_from_rational(fn::RationalFn::from_poly(fn::Polynomial(coeffs)));
      double gap =
          (opcalc::riesz_dunford_contour(f, t, 512) - poly_eval_matrix(coeffs, t.mat)).norm();
      if (gap > worst) {
        worst = gap;
        witness = "dim=" + std::to_string(dim);
      }
    }
    out.add("contour-polynomial-reproduction", worst, 1e-8, witness);
  }

  // linearity in f
  {
    opcalc::CMatrix t = random_contraction(rng, 3, 0.7);
    auto f1 = random_analytic(rng, 6);
    auto f2 = random_analytic(rng, 6);
    cplx s = rng.box_point(1.0);
    auto combo = opcalc::boundary_from_rational(
        fn::RationalFn::from_poly(f1.f.num + s * f2.f.num));
    double gap = (opcalc::riesz_dunford_contour(combo, t) -
                  (opcalc::riesz_dunford_contour(f1, t) + s * opcalc::riesz_dunford_contour(f2, t)))
                     .norm();
    out.add("contour-linearity", gap, 1e-12);
  }

  // node-count stability
  {
    opcalc::CMatrix t = random_contraction(rng, 4, 0.8);
    auto f = random_analytic(rng, 8);
    double gap =
        (opcalc::riesz_dunford_contour(f, t, 256) - opcalc::riesz_dunford_contour(f, t, 512)).norm();
    out.add("contour-node-stability", gap, 1e-10);
  }

  // spectral oracle agreement
  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      opcalc::CMatrix t = random_contraction(rng, 3, 0.8);
      auto f = random_analytic(rng, 8);
      worst = std::max(worst, (opcalc::riesz_dunford_contour(f, t, 512) -
                               opcalc::spectral_oracle(f, t))
                                  .norm());
    }
    out.add("contour-vs-spectral-oracle", worst, 1e-8);
  }

  // intertwining
  {
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < 10; ++i) {
      opcalc::CMatrix t = random_contraction(rng, 3, 0.6);
      Su11 g = rng.su11(0.4);
      auto f = random_analytic(rng, 5);
      double gap = opcalc::intertwine_residual(f, g, t, 512);
      if (gap > worst) {
        worst = gap;
        witness = describe(g);
      }
    }
    out.add("calculus-intertwining", worst, 1e-6, witness);
  }

  // Mobius action on matrices preserves the contraction property
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < 100; ++i) {
      opcalc::CMatrix t = random_contraction(rng, 3, 0.8);
      Su11 g = rng.su11(0.6);
      opcalc::CMatrix gt = opcalc::op_mobius(g, t);
      if (gt.norm_bound >= 1.0 + 1e-9) {
        ok = false;
        witness = describe(g);
        break;
      }
    }
    out.add_flag("mobius-matrix-contraction", ok, witness);
  }

  // disk-form divergence witness: drift grows with the cutoff
  {
    opcalc::CMatrix t = random_contraction(rng, 2, 0.5);
    auto one = opcalc::boundary_from_fourier({{0, cplx(1.0, 0.0)}});
    auto grid = grids::disk_grid(48, 64, grids::DiskLaw::weighted, 1.0, 2);
    auto d1 = opcalc::riesz_dunford_disk(one, t, 0.9, *grid);
    auto d2 = opcalc::riesz_dunford_disk(one, t, 0.95, *grid);
    bool ok = d1.divergence_flag && d2.divergence_flag && d2.drift > d1.drift;
    out.add_flag("disk-form-divergence-witness", ok);
  }

  // Weyl symmetrization: linearity and agreement with the integral form on
  // commuting (diagonal) inputs regularized by a Gaussian
  {
    Eigen::MatrixXcd t1 = Eigen::MatrixXcd::Zero(3, 3), t2 = Eigen::MatrixXcd::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
      t1(i, i) = rng.uniform(-1.0, 1.0);
      t2(i, i) = rng.uniform(-1.0, 1.0);
    }
    std::vector<opcalc::CMatrix> T{opcalc::make_cmatrix(t1), opcalc::make_cmatrix(t2)};

    // f(x) = (1 + x1^2 x2) e^{-|x|^2/2}; integral form vs spectral values
    std::map<std::vector<int>, cplx> poly{{{0, 0}, cplx(1.0, 0.0)}, {{2, 1}, cplx(1.0, 0.0)}};
    opcalc::WeylFunction f = opcalc::weyl_gaussian_poly(Eigen::MatrixXd::Identity(2, 2),
                                                        Eigen::VectorXd::Zero(2), poly);
    auto grid = grids::plane_grid(48);
    Eigen::MatrixXcd viaIntegral = opcalc::weyl_integral(f, T, *grid);
    Eigen::MatrixXcd viaSpectrum = Eigen::MatrixXcd::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
      Eigen::VectorXd x(2);
      x << t1(i, i).real(), t2(i, i).real();
      viaSpectrum(i, i) = f.eval_at(x);
    }
    out.add("weyl-integral-vs-joint-spectrum", (viaIntegral - viaSpectrum).norm(), 1e-6);

    // symmetrized polynomial map is linear and order-symmetric
    opcalc::CommutativePoly p12 = opcalc::CommutativePoly::monomial(2, {1, 1});
    Eigen::MatrixXcd sym = opcalc::weyl_poly(p12, T);
    Eigen::MatrixXcd direct = 0.5 * (t1 * t2 + t2 * t1);
    out.add("weyl-poly-symmetrization", (sym - direct).norm(), 1e-13);
  }

  // matrix exponential: unitary on Hermitian arguments
  {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      Eigen::MatrixXcd h(3, 3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) h(r, c) = rng.box_point(1.0);
      h = 0.5 * (h + h.adjoint()).eval();
      Eigen::MatrixXcd u = opcalc::matrix_exp(cplx(0.0, 1.0) * h);
      worst = std::max(worst,
                       (u.adjoint() * u - Eigen::MatrixXcd::Identity(3, 3)).norm());
    }
    out.add("matrix-exp-unitarity", worst, 1e-12);
  }

  return out.report;
}

std::vector<Report> verify_all(std::uint64_t seed) {
  return {verify_groups(seed), verify_reps(seed), verify_cstrans(seed), verify_qplane(seed),
          verify_opcalc(seed)};
}

} // namespace cohana::verify
