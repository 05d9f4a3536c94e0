#pragma once

#include <variant>

#include "cohana/functions.hpp"
#include "cohana/grids.hpp"
#include "cohana/groups.hpp"

namespace cohana::reps {

using cplx = std::complex<double>;

enum class RepKind { mock_discrete, discrete_series, schrodinger };

struct Representation {
  RepKind kind;
  int m = 0; // discrete series weight, >= 2
  grids::GridPtr space;
};

Representation mock_discrete(grids::GridPtr circle);
Representation discrete_series(int m, grids::GridPtr disk);
Representation schrodinger(grids::GridPtr line);

using GroupElement = std::variant<groups::Su11, groups::Heis>;

// pi_g f. The SU(1,1) formulas are parameterized by the entries of g^{-1}
// (groups::su11_action_entries); the Heisenberg formula acts by the element
// itself. Both give homomorphisms: apply(g1, apply(g2, f)) = apply(g1*g2, f).
// Inputs must carry a closed form (off-node evaluation); the Schrodinger
// representation additionally requires the Gauss-Hermite class, on which it
// acts symbolically.
grids::SampledFunction apply(const Representation& rep, const GroupElement& g,
                             const grids::SampledFunction& f);

grids::SampledFunction vacuum(const Representation& rep);

// chi(h) for h in the designated subgroup (h_psi, resp. (t,0)).
cplx vacuum_character(const Representation& rep, const GroupElement& h);

double unitarity_residual(const Representation& rep, const GroupElement& g,
                          const grids::SampledFunction& f1, const grids::SampledFunction& f2);

} // namespace cohana::reps
