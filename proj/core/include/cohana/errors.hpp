#pragma once

#include <stdexcept>
#include <string>

namespace cohana {

enum class errc {
  invalid_input,      // bad numeric input (determinant, invariant violation)
  domain_error,       // argument outside the operation's domain (|a| >= 1, ...)
  pole,               // evaluation at / too close to a pole
  grid_mismatch,      // functions on different grids
  dimension_mismatch, // Heisenberg n or matrix dimensions disagree
  divergent_integral, // Hardy inverse without regularization
  norm_violation,     // operator norm certificate out of range
  numerical,          // ill-conditioned solve, failed iteration
  parse_error,        // expression syntax error (carries position)
  not_supported,      // representation requires a closed-form input
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

class parse_error : public error {
public:
  parse_error(std::size_t position, const std::string& what)
      : error(errc::parse_error, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace cohana
