#pragma once

#include "xreal/rational.hpp"
#include "xreal/stream.hpp"

namespace xreal {

// Certified enclosure [lo/2^k, hi/2^k] of a stream's value after
// inspecting a finite prefix. bounds(s, n) carries k = n + 1: the extra
// bit keeps the half-unit weight of C integral, and hi - lo == 2 holds
// for every n (interval width exactly 2^-n).
struct DyadicBounds {
  mpz_class lo;
  mpz_class hi;
  unsigned long k = 1;
};

DyadicBounds bounds(const DigitStream& s, unsigned long n);

Rational lower(const DyadicBounds& b);
Rational upper(const DyadicBounds& b);

// approx_lower(s, n) = lower(bounds(s, n)), a nondecreasing rational
// approximation from below.
Rational approx_lower(const DigitStream& s, unsigned long n);

bool operator==(const DyadicBounds& a, const DyadicBounds& b);

// True iff a (at level n+1) refines b (taken at level n): used to state
// the nesting invariant bounds(s, n+1) inside bounds(s, n).
bool nested_in(const DyadicBounds& inner, const DyadicBounds& outer);

}  // namespace xreal
