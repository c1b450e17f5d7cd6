#pragma once

#include "xreal/bounds.hpp"
#include "xreal/rational.hpp"

namespace xreal {

// Exact reference enclosures used to cross-check the stream algorithms.
// Everything here is plain rational arithmetic with textbook tail
// bounds; none of it touches digit streams.

struct CertifiedValue {
  Rational lo;
  Rational hi;
};

inline CertifiedValue certified_point(Rational v) { return {v, v}; }

Rational width(const CertifiedValue& v);

// [S, S + 1/(terms! * terms)] where S = sum_{k=2}^{terms} 1/k!.
// Requires terms >= 2.
CertifiedValue oracle_e_minus2(unsigned long terms);

// Enclosure of arctan(1/k) by two consecutive alternating partial sums
// of sum_j (-1)^j / ((2j+1) k^(2j+1)); `terms` is the index of the last
// included term (terms >= 1), and the width is exactly that term.
CertifiedValue oracle_atan_inv(unsigned long k, unsigned long terms);

// Consistency of a dyadic enclosure with a certified value: interval
// intersection when v has width, membership when v is a point.
bool check_contains(const DyadicBounds& b, const CertifiedValue& v);

}  // namespace xreal
