#include "xreal/digit.hpp"

#include <stdexcept>

namespace xreal {

Rational alpha(Digit d) { return make_rational(digit_weight(d), 2); }

Rational lift_value(Digit d, const Rational& v) { return (v + alpha(d)) / 2; }

char digit_char(Digit d) {
  switch (d) {
    case Digit::L: return 'L';
    case Digit::C: return 'C';
    case Digit::R: return 'R';
  }
  return '?';
}

Digit digit_from_char(char c) {
  switch (c) {
    case 'L': return Digit::L;
    case 'C': return Digit::C;
    case 'R': return Digit::R;
  }
  throw std::invalid_argument("not a digit character");
}

}  // namespace xreal
