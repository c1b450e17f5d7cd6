#pragma once

#include <optional>

#include "xreal/rational.hpp"
#include "xreal/stream.hpp"

namespace xreal {

// Evaluation state for (a/a')x + (b/b')y + c/c' over two digit streams.
// Numerators a, b, c are >= 0 and denominators ad, bd, cd are > 0
// throughout; the represented value must lie in [0,1].
struct AffineState {
  mpz_class a, ad;
  mpz_class b, bd;
  mpz_class c, cd;
  DigitStream x, y;
};

bool positive_coefficients(const AffineState& s);

// Value of the affine form at rational stream values (the state's exact
// semantics; used by tests and the CLI pre-check).
Rational affine_value(const AffineState& s, const Rational& xv,
                      const Rational& yv);

struct AffineEmit {
  Digit digit;
  AffineState state;
};

// Emission decision from the extrema m = c/c', M = a/a' + b/b' + c/c':
// R if m >= 1/2, else L if M <= 1/2, else C if m >= 1/4 and M <= 3/4;
// nullopt means no digit is certain yet and a digit must be absorbed.
std::optional<AffineEmit> try_emit(const AffineState& s);

// Residual states after emitting a digit: value' = 2*value - alpha(d).
// prod_R needs 2c >= c', prod_C needs 4c >= c' (caller errors otherwise).
AffineState prod_L(AffineState s);
AffineState prod_C(AffineState s);
AffineState prod_R(AffineState s);

// Forces one digit of each stream with a nonzero coefficient and folds
// it into the constant term, halving the stream's weight.
AffineState absorb(AffineState s);

// Least k >= 0 with 4(a*bd + b*ad) < 2^k * ad * bd. Bounds the number of
// consecutive absorbs before try_emit succeeds; absorb decreases it by
// one while positive.
unsigned long measure(const AffineState& s);

// The digit stream of the affine form. Coefficient growth is tamed by
// per-fraction gcd reduction after each emission, on by default; the
// XREAL_GCD_REDUCE environment variable (0 or 1) or the override below
// toggles it. Reduction never changes emitted digits.
DigitStream axbyc(AffineState s);

void set_affine_gcd_reduce(std::optional<bool> enabled);  // nullopt = env/default

}  // namespace xreal
