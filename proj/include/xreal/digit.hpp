#pragma once

#include "xreal/rational.hpp"

namespace xreal {

// Redundant binary digits for [0,1]. A digit d denotes the basic
// interval [alpha(d)/2, alpha(d)/2 + 1/2]:
//   L -> [0, 1/2]    C -> [1/4, 3/4]    R -> [1/2, 1]
enum class Digit : unsigned char { L, C, R };

// 2*alpha(d), the digit's weight on the integer scale: 0, 1, 2.
constexpr int digit_weight(Digit d) { return static_cast<int>(d); }

Rational alpha(Digit d);

// lift_value(d, v) = (v + alpha(d))/2; prepending d to a stream whose
// value is v yields a stream whose value is this.
Rational lift_value(Digit d, const Rational& v);

char digit_char(Digit d);
Digit digit_from_char(char c);  // throws std::invalid_argument

}  // namespace xreal
