#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cohana/errors.hpp"
#include "cohana/groups.hpp"

using namespace cohana;
using groups::Heis;
using groups::Su11;
using cplx = std::complex<double>;

namespace {
const double pi = std::numbers::pi;

Su11 random_su11(std::mt19937_64& gen, double rmax = 0.6) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  cplx a = std::polar(rmax * std::sqrt(u(gen)), 2.0 * pi * u(gen));
  return groups::su11_mul(groups::su11_section(a), Su11::rotation(pi * (2.0 * u(gen) - 1.0)));
}
} // namespace

TEST_CASE("su11_from_sl2 maps the sample matrices") {
  Su11 id = groups::su11_from_sl2(1, 0, 0, 1);
  CHECK(std::abs(id.alpha - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(id.beta) < 1e-15);

  // direct evaluation of the two identity formulas
  Su11 g = groups::su11_from_sl2(2, 0, 0, 0.5);
  CHECK(std::abs(g.alpha - cplx(1.25, 0.0)) < 1e-15);
  CHECK(std::abs(g.beta - cplx(0.0, -0.75)) < 1e-15);
  CHECK(g.invariant_defect() < 1e-12);

  double th = 0.3;
  Su11 rot = groups::su11_from_sl2(std::cos(th), std::sin(th), -std::sin(th), std::cos(th));
  CHECK(std::abs(rot.alpha - std::polar(1.0, th)) < 1e-14);
  CHECK(std::abs(rot.beta) < 1e-14);

  CHECK_THROWS_AS(groups::su11_from_sl2(2, 0, 0, 1), error);
}

TEST_CASE("su11_mul basics") {
  std::mt19937_64 gen(7);
  Su11 g = random_su11(gen);
  CHECK(groups::su11_distance(groups::su11_mul(g, Su11::identity()), g) < 1e-15);
  CHECK(groups::su11_distance(groups::su11_mul(g, groups::su11_inverse(g)), Su11::identity()) <
        1e-14);
  Su11 h = groups::su11_mul(Su11::rotation(0.4), Su11::rotation(0.9));
  CHECK(groups::su11_distance(h, Su11::rotation(1.3)) < 1e-15);
}

TEST_CASE("su11 decomposition") {
  auto d0 = groups::su11_decompose(Su11::identity());
  CHECK(std::abs(d0.a) < 1e-15);
  CHECK(d0.psi == doctest::Approx(0.0));

  auto dh = groups::su11_decompose(Su11::rotation(0.7));
  CHECK(std::abs(dh.a) < 1e-15);
  CHECK(dh.psi == doctest::Approx(0.7));

  std::mt19937_64 gen(11);
  for (int i = 0; i < 100; ++i) {
    Su11 g = random_su11(gen, 0.9);
    auto d = groups::su11_decompose(g);
    CHECK(std::abs(d.a) < 1.0);
    CHECK(d.psi > -pi - 1e-15);
    CHECK(d.psi <= pi + 1e-15);
    Su11 back = groups::su11_mul(groups::su11_section(d.a), Su11::rotation(d.psi));
    CHECK(groups::su11_distance(back, g) < 1e-12);
  }
}

TEST_CASE("su11_section values and round trip") {
  Su11 s0 = groups::su11_section(0.0);
  CHECK(groups::su11_distance(s0, Su11::identity()) < 1e-15);

  Su11 s = groups::su11_section(0.6);
  CHECK(std::abs(s.alpha - cplx(1.25, 0.0)) < 1e-14); // 1/sqrt(1-0.36)
  CHECK(std::abs(s.beta - cplx(0.75, 0.0)) < 1e-14);

  auto d = groups::su11_decompose(groups::su11_section(cplx(0.0, 0.5)));
  CHECK(std::abs(d.a - cplx(0.0, 0.5)) < 1e-14);
  CHECK(std::abs(d.psi) < 1e-14);

  CHECK_THROWS_AS(groups::su11_section(cplx(1.0, 0.0)), error);
}

TEST_CASE("mobius_disk follows the inverse parameterization") {
  cplx z(0.3, -0.2);
  CHECK(std::abs(groups::mobius_disk(Su11::identity(), z) - z) < 1e-15);

  // element whose inverse is h_psi rotates the boundary by 2 psi
  double psi = 0.35, phi = 1.2;
  Su11 gh = groups::su11_inverse(Su11::rotation(psi));
  cplx moved = groups::mobius_disk(gh, std::polar(1.0, phi));
  CHECK(std::abs(moved - std::polar(1.0, phi + 2.0 * psi)) < 1e-14);

  // element whose inverse is s(a) sends 0 to a
  cplx a(0.25, 0.4);
  Su11 gs = groups::su11_inverse(groups::su11_section(a));
  CHECK(std::abs(groups::mobius_disk(gs, cplx(0.0, 0.0)) - a) < 1e-14);

  // the pole sits outside the closed disk; hitting it is an error
  Su11 gp = groups::su11_inverse(groups::su11_section(cplx(0.5, 0.0)));
  CHECK_THROWS_AS(groups::mobius_disk(gp, cplx(-2.0, 0.0)), error);
}

TEST_CASE("mobius_disk composition and orbits") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 50; ++i) {
    Su11 g1 = random_su11(gen), g2 = random_su11(gen);
    cplx z = std::polar(0.8 * std::sqrt(std::uniform_real_distribution<>(0, 1)(gen)),
                        std::uniform_real_distribution<>(0, 2 * pi)(gen));
    cplx lhs = groups::mobius_disk(groups::su11_mul(g1, g2), z);
    cplx rhs = groups::mobius_disk(g2, groups::mobius_disk(g1, z));
    CHECK(std::abs(lhs - rhs) < 1e-11);

    CHECK(groups::orbit_classify(groups::mobius_disk(g1, z)) == groups::Orbit::disk);
    cplx b = std::polar(1.0, 0.77);
    CHECK(groups::orbit_classify(groups::mobius_disk(g1, b)) == groups::Orbit::circle);
    CHECK(groups::orbit_classify(groups::mobius_disk(g1, cplx(2.0, 3.0))) ==
          groups::Orbit::exterior);
  }
}

TEST_CASE("orbit classification") {
  CHECK(groups::orbit_classify(cplx(0.0, 0.0)) == groups::Orbit::disk);
  CHECK(groups::orbit_classify(std::polar(1.0, 1.1)) == groups::Orbit::circle);
  CHECK(groups::orbit_classify(cplx(2.0, 3.0)) == groups::Orbit::exterior);
}

TEST_CASE("heis_mul and the commutation identity") {
  Heis id(0.0, cplx(0.0, 0.0));
  Heis g(0.7, cplx(0.2, -0.4));
  CHECK(groups::heis_distance(groups::heis_mul(id, g), g) < 1e-16);

  // (0,1)*(0,i) = (1/2, 1+i), and equals (1,0)*(0,i)*(0,1)
  Heis p = groups::heis_mul(Heis(0.0, cplx(1.0, 0.0)), Heis(0.0, cplx(0.0, 1.0)));
  CHECK(p.t == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(p.z[0] - cplx(1.0, 1.0)) < 1e-16);
  Heis q = groups::heis_mul(groups::heis_mul(Heis(1.0, cplx(0.0, 0.0)), Heis(0.0, cplx(0.0, 1.0))),
                            Heis(0.0, cplx(1.0, 0.0)));
  CHECK(groups::heis_distance(p, q) < 1e-15);

  Heis two(0.0, std::vector<cplx>{cplx(1.0, 0.0), cplx(0.0, 1.0)});
  CHECK_THROWS_AS(groups::heis_mul(g, two), error);
}

TEST_CASE("heis_inverse") {
  CHECK(groups::heis_distance(groups::heis_inverse(Heis(0.8, cplx(0.0, 0.0))),
                              Heis(-0.8, cplx(0.0, 0.0))) < 1e-16);
  Heis g(0.0, cplx(0.3, 0.9));
  CHECK(groups::heis_distance(groups::heis_inverse(g), Heis(0.0, cplx(-0.3, -0.9))) < 1e-16);

  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    Heis h(u(gen), cplx(u(gen), u(gen)));
    Heis prod = groups::heis_mul(h, groups::heis_inverse(h));
    CHECK(groups::heis_distance(prod, Heis(0.0, cplx(0.0, 0.0))) < 1e-14);
  }
}

TEST_CASE("heis_reduce") {
  Heis g(pi, cplx(0.2, 0.1));
  Heis r = groups::heis_reduce(g);
  CHECK(r.t == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(r.z[0] - g.z[0]) < 1e-16);

  Heis g2(4.0, cplx(0.0, 0.0));
  CHECK(groups::heis_reduce(g2).t == doctest::Approx(4.0 - pi));

  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    Heis a(u(gen), cplx(u(gen), u(gen)));
    Heis b(u(gen), cplx(u(gen), u(gen)));
    Heis lhs = groups::heis_reduce(groups::heis_mul(a, b));
    Heis rhs =
        groups::heis_reduce(groups::heis_mul(groups::heis_reduce(a), groups::heis_reduce(b)));
    CHECK(groups::heis_distance(lhs, rhs) < 1e-12);
  }
}
