#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cohana::verify {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string counterexample; // first failing instance, empty when passing
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const;
};

Report verify_groups(std::uint64_t seed);
Report verify_reps(std::uint64_t seed);
Report verify_cstrans(std::uint64_t seed);
Report verify_qplane(std::uint64_t seed);
Report verify_opcalc(std::uint64_t seed);

std::vector<Report> verify_all(std::uint64_t seed);

} // namespace cohana::verify
