#include "xreal/bounds.hpp"

#include <cassert>

namespace xreal {

DyadicBounds bounds(const DigitStream& s, unsigned long n) {
  mpz_class lo = 0;
  DigitStream cur = s;
  for (unsigned long i = 0; i < n; ++i) {
    const StreamHead& h = cur.force();
    lo = 2 * lo + digit_weight(h.digit);
    cur = h.tail;
  }
  DyadicBounds b;
  b.hi = lo + 2;
  b.lo = std::move(lo);
  b.k = n + 1;
  return b;
}

Rational lower(const DyadicBounds& b) { return make_rational(b.lo, pow2(b.k)); }

Rational upper(const DyadicBounds& b) { return make_rational(b.hi, pow2(b.k)); }

Rational approx_lower(const DigitStream& s, unsigned long n) {
  return lower(bounds(s, n));
}

bool operator==(const DyadicBounds& a, const DyadicBounds& b) {
  return a.k == b.k && a.lo == b.lo && a.hi == b.hi;
}

bool nested_in(const DyadicBounds& inner, const DyadicBounds& outer) {
  assert(inner.k >= outer.k);
  unsigned long shift = inner.k - outer.k;
  mpz_class lo_o = outer.lo << shift;
  mpz_class hi_o = outer.hi << shift;
  return lo_o <= inner.lo && inner.hi <= hi_o;
}

}  // namespace xreal
