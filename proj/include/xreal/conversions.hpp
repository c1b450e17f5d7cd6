#pragma once

#include <functional>
#include <string>
#include <utility>

#include "xreal/bounds.hpp"
#include "xreal/stream.hpp"

namespace xreal {

// Greedy C-free expansion of p/q in [0,1]. Requires 0 <= p <= q, q > 0;
// violations throw std::invalid_argument before any stream is built.
DigitStream rat_to_stream(mpz_class p, mpz_class q);

// A Dedekind-style cut of a real r in [0,1]: decide(a, b) answers
// "r <= a/b" for positive b. Must be monotone in a/b to mean anything.
using CutPredicate = std::function<bool(const mpz_class&, const mpz_class&)>;

// Bisection against the cut. Emits L when decide(1, 2) holds, rescaling
// the predicate to (a, 2b); otherwise R, rescaling to (a+b, 2b).
DigitStream stream_of_cut(CutPredicate decide);

// A Cauchy sequence with modulus: values(i) is an exact fraction
// (num, den) with den > 0, and |values(i) - values(j)| < 2^-n whenever
// i, j >= modulus(n).
struct CauchyInput {
  std::function<std::pair<mpz_class, mpz_class>(long)> values;
  std::function<long(long)> modulus;
};

// Interval-refinement conversion. At step n it evaluates
// v = values(modulus(n+3)), rescales a = 2^n (v - b) against the current
// lower bound b, and emits L (a <= 3/8), C (a <= 5/8, b += 1/2^(n+2)) or
// R (b += 1/2^(n+1)), all by cross-multiplied integer comparisons on
// unreduced fractions.
DigitStream stream_of_cauchy(CauchyInput in);

// "0.d1d2...dm" where every printed digit is certified by a dyadic
// enclosure of s. Scans bounds(s, n) for growing n until `digits` decimal
// digits are fixed; if the interval still straddles a decimal boundary at
// the n-cap (4*digits + 32), prints the certified prefix and a trailing
// '?'.
std::string decimal_render(const DigitStream& s, std::size_t digits);

}  // namespace xreal
