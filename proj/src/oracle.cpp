#include "xreal/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace xreal {

Rational width(const CertifiedValue& v) { return v.hi - v.lo; }

CertifiedValue oracle_e_minus2(unsigned long terms) {
  if (terms < 2) throw std::invalid_argument("oracle_e_minus2: terms >= 2");
  mpz_class fact = 1;
  Rational sum = 0;
  for (unsigned long k = 2; k <= terms; ++k) {
    fact *= k;
    sum += make_rational(1, fact);
  }
  Rational tail = make_rational(1, fact * terms);
  return {sum, sum + tail};
}

CertifiedValue oracle_atan_inv(unsigned long k, unsigned long terms) {
  if (k < 2 || terms < 1)
    throw std::invalid_argument("oracle_atan_inv: need k >= 2, terms >= 1");
  mpz_class kpow = k;  // k^(2j+1)
  Rational prev = 0, cur = 0;
  for (unsigned long j = 0; j <= terms; ++j) {
    prev = cur;
    Rational t = make_rational(1, (2 * j + 1) * kpow);
    cur += (j % 2 == 0) ? t : -t;
    kpow *= mpz_class(k) * k;
  }
  return {std::min(prev, cur), std::max(prev, cur)};
}

bool check_contains(const DyadicBounds& b, const CertifiedValue& v) {
  Rational blo = lower(b), bhi = upper(b);
  if (v.lo == v.hi) return blo <= v.lo && v.lo <= bhi;
  return v.lo <= bhi && blo <= v.hi;
}

}  // namespace xreal
