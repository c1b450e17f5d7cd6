#include "xreal/affine.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>

namespace xreal {

bool positive_coefficients(const AffineState& s) {
  return s.a >= 0 && s.b >= 0 && s.c >= 0 && s.ad > 0 && s.bd > 0 && s.cd > 0;
}

Rational affine_value(const AffineState& s, const Rational& xv,
                      const Rational& yv) {
  return make_rational(s.a, s.ad) * xv + make_rational(s.b, s.bd) * yv +
         make_rational(s.c, s.cd);
}

std::optional<AffineEmit> try_emit(const AffineState& s) {
  assert(positive_coefficients(s));
  // m >= 1/2  <=>  2c >= c'
  if (2 * s.c >= s.cd) return AffineEmit{Digit::R, prod_R(s)};
  // M <= 1/2 with M = a/a' + b/b' + c/c', cross-multiplied
  mpz_class mnum = s.a * s.bd * s.cd + s.b * s.ad * s.cd + s.c * s.ad * s.bd;
  mpz_class den = s.ad * s.bd * s.cd;
  if (2 * mnum <= den) return AffineEmit{Digit::L, prod_L(s)};
  if (4 * s.c >= s.cd && 4 * mnum <= 3 * den)
    return AffineEmit{Digit::C, prod_C(s)};
  return std::nullopt;
}

AffineState prod_L(AffineState s) {
  s.a *= 2;
  s.b *= 2;
  s.c *= 2;
  return s;
}

AffineState prod_R(AffineState s) {
  assert(2 * s.c >= s.cd);
  s.a *= 2;
  s.b *= 2;
  s.c = 2 * s.c - s.cd;
  return s;
}

AffineState prod_C(AffineState s) {
  assert(4 * s.c >= s.cd);
  s.a *= 2;
  s.b *= 2;
  s.c = 4 * s.c - s.cd;
  s.cd *= 2;
  return s;
}

namespace {

// num/den += t/u
void add_fraction(mpz_class& num, mpz_class& den, const mpz_class& t,
                  const mpz_class& u) {
  num = num * u + t * den;
  den *= u;
}

}  // namespace

AffineState absorb(AffineState s) {
  // c/c' += a*alpha(dx)/(2a') + b*alpha(dy)/(2b') with the old
  // denominators, i.e. per digit weight w = 2*alpha a term of
  // coef/(2*den) for w = 2 and coef/(4*den) for w = 1.
  if (s.a > 0) {
    const StreamHead& hx = s.x.force();
    int w = digit_weight(hx.digit);
    if (w == 2) add_fraction(s.c, s.cd, s.a, 2 * s.ad);
    if (w == 1) add_fraction(s.c, s.cd, s.a, 4 * s.ad);
    s.x = hx.tail;
    s.ad *= 2;
  }
  if (s.b > 0) {
    const StreamHead& hy = s.y.force();
    int w = digit_weight(hy.digit);
    if (w == 2) add_fraction(s.c, s.cd, s.b, 2 * s.bd);
    if (w == 1) add_fraction(s.c, s.cd, s.b, 4 * s.bd);
    s.y = hy.tail;
    s.bd *= 2;
  }
  return s;
}

unsigned long measure(const AffineState& s) {
  mpz_class lhs = 4 * (s.a * s.bd + s.b * s.ad);
  mpz_class rhs = s.ad * s.bd;
  unsigned long k = 0;
  while (lhs >= rhs) {
    rhs *= 2;
    ++k;
  }
  return k;
}

namespace {

std::atomic<int> g_gcd_override{-1};  // -1 = follow environment

bool gcd_reduce_enabled() {
  int ov = g_gcd_override.load(std::memory_order_relaxed);
  if (ov >= 0) return ov != 0;
  static const bool from_env = [] {
    const char* v = std::getenv("XREAL_GCD_REDUCE");
    return !(v && v[0] == '0' && v[1] == '\0');
  }();
  return from_env;
}

void reduce_fraction(mpz_class& num, mpz_class& den) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

AffineState reduce_state(AffineState s) {
  reduce_fraction(s.a, s.ad);
  reduce_fraction(s.b, s.bd);
  reduce_fraction(s.c, s.cd);
  return s;
}

}  // namespace

void set_affine_gcd_reduce(std::optional<bool> enabled) {
  g_gcd_override.store(enabled ? (*enabled ? 1 : 0) : -1,
                       std::memory_order_relaxed);
}

DigitStream axbyc(AffineState s) {
  return DigitStream([s = std::move(s)]() mutable -> StreamHead {
    // Bounded by measure(s): each absorb halves a/a' + b/b'.
    std::optional<AffineEmit> e;
    while (!(e = try_emit(s))) s = absorb(s);
    AffineState next = gcd_reduce_enabled() ? reduce_state(std::move(e->state))
                                            : std::move(e->state);
    return {e->digit, axbyc(std::move(next))};
  });
}

}  // namespace xreal
