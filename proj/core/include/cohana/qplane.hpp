#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cohana/ncpoly.hpp"

namespace cohana::qplane {

struct Mq2Report {
  // forward: x' = ax + by, y' = cx + dy (and the transpose matrix) preserve
  // the plane relation after reduction by the quantum-matrix relations
  bool forward_zero = false;
  std::vector<std::string> remainder_terms; // nonempty only on failure

  // converse: vanishing coefficients of the unreduced expansion, canonicalized
  std::vector<std::string> extracted_relations;
  bool converse_matches = false; // extracted set equals the relation set, 6 items

  bool commutative_limit = false; // q = 1 collapses to commuting entries
};

Mq2Report verify_mq2();

struct ClockShift {
  Eigen::MatrixXcd X; // diagonal clock
  Eigen::MatrixXcd Y; // cyclic shift
  cplx q;             // e^{2 pi i / n}
  double residual;    // ||XY - qYX||_max
};

ClockShift clock_shift(int n);

} // namespace cohana::qplane
