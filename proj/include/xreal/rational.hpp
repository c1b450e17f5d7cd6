#pragma once

#include <gmpxx.h>

namespace xreal {

// Exact fraction of big integers. Canonical form (gcd 1, positive
// denominator) is maintained by construction; everything downstream
// assumes it.
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline mpz_class pow2(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace xreal
