#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xreal/rational.hpp"

namespace xreal {

// A validated command for the xreal tool. Operands stay textual until
// run() parses them, so the tool's argv loop stays trivial.
struct CliRequest {
  std::string command;                // const|add|sub|mul|halfsum|affine|cut-demo|cauchy-demo
  std::vector<std::string> operands;  // constant name or "p/q" rationals
  unsigned long bits = 32;
  bool show_digits = false;
  bool show_decimal = false;
  bool show_bounds = true;  // bounds line is always printed; flag kept for symmetry
  // affine coefficients (--a --a' --b --b' --c --c')
  mpz_class af_a = 0, af_ad = 1, af_b = 0, af_bd = 1, af_c = 0, af_cd = 1;
};

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Executes the request and returns the full stdout text (deterministic
// bytes). Throws CliError on malformed operands, out-of-range values,
// or a sub request with x < y.
std::string run(const CliRequest& req);

}  // namespace xreal
