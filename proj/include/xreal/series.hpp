#pragma once

#include <optional>
#include <utility>

#include "xreal/rational.hpp"
#include "xreal/stream.hpp"

namespace xreal {

// One output step shared by the series evaluators. v carries the partial
// sum plus a nonnegative residue bounded by 1/8; the emitted digit is
// certain for every such residue, and the continuation f receives the
// rescaled stream together with the unchanged engine state. Inspects one
// digit of v, or two when the head alone is not decisive.
template <class State, class F>
DigitStream series_body(F f, DigitStream v, State a) {
  return DigitStream(
      [f = std::move(f), v = std::move(v), a = std::move(a)]() -> StreamHead {
        const StreamHead& h1 = v.force();
        switch (h1.digit) {
          case Digit::R:
            return {Digit::R, f(h1.tail, a)};
          case Digit::C: {
            const StreamHead& h2 = h1.tail.force();
            if (h2.digit == Digit::R)
              return {Digit::R, f(DigitStream::cons(Digit::L, h2.tail), a)};
            return {Digit::C, f(h1.tail, a)};
          }
          case Digit::L: {
            const StreamHead& h2 = h1.tail.force();
            if (h2.digit == Digit::R)
              return {Digit::C, f(DigitStream::cons(Digit::L, h2.tail), a)};
            return {Digit::L, f(h1.tail, a)};
          }
        }
        return {Digit::L, zero()};  // unreachable
      });
}

// Emitter for residues of either sign, |rho| <= 1/16. Inspects at most
// three digits of v and returns the emitted digit plus the rescaled
// stream (value 2*value(v) - alpha(d)), rewriting the head via the
// prefix equivalences CL = LR, CR = RL where the literal tail is not a
// valid rescaling.
std::pair<Digit, DigitStream> general_emit(const DigitStream& v);

// State of the Taylor evaluation of e - 2 = sum_{k>=2} 1/k!. theta is
// (n-1)! and y the accumulated power of two; the engine absorbs the next
// term y/theta' into the partial sum whenever the tail bound y/(theta
// (n-1)) rises above 1/8.
struct ESeriesState {
  mpz_class y;
  unsigned long n = 4;
  mpz_class theta = 6;
};

struct ESeriesStep {
  ESeriesState state;                                    // post-step (y doubled)
  std::optional<std::pair<mpz_class, mpz_class>> term;   // absorbed y/theta'
};

ESeriesStep e_series_step(const ESeriesState& s);

DigitStream e_series(DigitStream x, ESeriesState s);

// Shared memoized stream for e - 2; safe to extend from any thread.
DigitStream number_e_minus2();

// u + alpha(d)*value(v)/2: the contribution of one digit of a
// multiplier to the running sum (L -> u, C -> u + v/4, R -> u + v/2).
DigitStream sum_mult_d(Digit d, DigitStream u, DigitStream v);

// x + value(u)*value(v), absorbing one digit of u per emitted digit.
// Needs value(u)*value(v) small enough that every partial sum stays in
// [0,1]; mult's pre-scaling guarantees that.
DigitStream mult_a(DigitStream x, DigitStream u, DigitStream v);

// x*y on [0,1].
DigitStream mult(DigitStream x, DigitStream y);

// arctan(1/k) for k >= 2, via the positive series of pairwise-grouped
// alternating terms a_i = 1/((4i+1)k^(4i+1)) - 1/((4i+3)k^(4i+3)).
DigitStream atan_inv(unsigned long k);

// pi/4 = arctan(1/2) + arctan(1/3).
DigitStream pi_over_4();

}  // namespace xreal
