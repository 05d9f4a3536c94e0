#pragma once

#include <complex>
#include <vector>

namespace cohana::groups {

using cplx = std::complex<double>;

// Element of SU(1,1): the matrix [[alpha, beta], [conj(beta), conj(alpha)]]
// with |alpha|^2 - |beta|^2 = 1. Construction normalizes when the defect is
// below 1e-8 and rejects otherwise.
struct Su11 {
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};

  Su11() = default;
  Su11(cplx a, cplx b);

  static Su11 identity() { return Su11{}; }
  // Diagonal subgroup element h_psi = diag(e^{i psi}, e^{-i psi}).
  static Su11 rotation(double psi);

  double invariant_defect() const;
};

struct Su11Decomposition {
  cplx a;     // point in the unit disk, a = beta / conj(alpha)
  double psi; // Im ln alpha, principal branch in (-pi, pi]
};

Su11 su11_from_sl2(double a, double b, double c, double d);
Su11 su11_mul(const Su11& g1, const Su11& g2);
Su11 su11_inverse(const Su11& g);
Su11Decomposition su11_decompose(const Su11& g);
Su11 su11_section(cplx a); // s(a), requires |a| < 1

// Entries (alpha, beta) of g^{-1}: every fraction-linear formula in this
// project is parameterized by the inverse of the acting element, and this
// helper is the single owner of that convention.
struct ActionEntries {
  cplx alpha;
  cplx beta;
};
ActionEntries su11_action_entries(const Su11& g);

// z -> (alpha z + beta) / (conj(beta) z + conj(alpha)) with (alpha, beta)
// the entries of g^{-1}. Composes as mobius(g1*g2, z) = mobius(g2, mobius(g1, z)).
cplx mobius_disk(const Su11& g, cplx z);

enum class Orbit { disk, circle, exterior };
Orbit orbit_classify(cplx z);

// Heisenberg group element (t, z), z in C^n.
struct Heis {
  double t = 0.0;
  std::vector<cplx> z;

  Heis() : z(1, cplx{0.0, 0.0}) {}
  Heis(double t_, cplx z_) : t(t_), z(1, z_) {}
  Heis(double t_, std::vector<cplx> z_);

  std::size_t n() const { return z.size(); }
};

Heis heis_mul(const Heis& g1, const Heis& g2);
Heis heis_inverse(const Heis& g);
// Coset representative modulo the central subgroup {(pi m, 0)}: t in [0, pi).
Heis heis_reduce(const Heis& g);

double heis_distance(const Heis& g1, const Heis& g2);
double su11_distance(const Su11& g1, const Su11& g2);

} // namespace cohana::groups
