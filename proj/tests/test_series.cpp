#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "xreal/basic_ops.hpp"
#include "xreal/bounds.hpp"
#include "xreal/conversions.hpp"
#include "xreal/oracle.hpp"
#include "xreal/series.hpp"

using namespace xreal;
using namespace xreal::testing;

namespace {

DigitStream s_of(const Rational& v) {
  return rat_to_stream(v.get_num(), v.get_den());
}

// series_body with the identity continuation: the output is the emitted
// digit followed by the rescaled stream itself.
DigitStream probe_body(DigitStream v) {
  return series_body([](DigitStream nv, int) { return nv; }, std::move(v), 0);
}

}  // namespace

TEST_CASE("series_body five cases") {
  DigitStream t = prepend({Digit::C, Digit::C}, zero());

  // R-head: emit R, pass the literal tail
  DigitStream r = probe_body(prepend({Digit::R}, t));
  CHECK(take(r, 3) == std::vector<Digit>{Digit::R, Digit::C, Digit::C});

  // CR rewrites to RL before the split
  DigitStream cr = probe_body(prepend({Digit::C, Digit::R}, t));
  CHECK(take(cr, 4) ==
        std::vector<Digit>{Digit::R, Digit::L, Digit::C, Digit::C});

  // C with a non-R successor stays C
  DigitStream cl = probe_body(prepend({Digit::C, Digit::L}, t));
  CHECK(take(cl, 4) ==
        std::vector<Digit>{Digit::C, Digit::L, Digit::C, Digit::C});

  // LR rewrites to CL
  DigitStream lr = probe_body(prepend({Digit::L, Digit::R}, t));
  CHECK(take(lr, 4) ==
        std::vector<Digit>{Digit::C, Digit::L, Digit::C, Digit::C});

  // L with a non-R successor stays L
  DigitStream ll = probe_body(prepend({Digit::L, Digit::L}, t));
  CHECK(take(ll, 4) ==
        std::vector<Digit>{Digit::L, Digit::L, Digit::C, Digit::C});
}

TEST_CASE("series_body lookahead: R decides alone, L and C peek once") {
  CHECK(probe_body(poison_after({Digit::R})).head() == Digit::R);
  CHECK_THROWS_AS(probe_body(poison_after({Digit::C})).head(),
                  std::logic_error);
  CHECK_THROWS_AS(probe_body(poison_after({Digit::L})).head(),
                  std::logic_error);
  CHECK_NOTHROW(probe_body(poison_after({Digit::C, Digit::L})).head());
  CHECK_NOTHROW(probe_body(poison_after({Digit::L, Digit::R})).head());
}

TEST_CASE("series_body preserves the value") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    Rational v = random_rational(rng, 14);
    CHECK(encloses(bounds(probe_body(s_of(v)), 40), v));
  }
}

TEST_CASE("general_emit is exact on every three-digit prefix") {
  const Rational tails[] = {Rational(0), Rational(1), make_rational(1, 3)};
  for (Digit d1 : kAllDigits)
    for (Digit d2 : kAllDigits)
      for (Digit d3 : kAllDigits)
        for (const Rational& tv : tails) {
          std::vector<Digit> w{d1, d2, d3};
          Rational v = word_value(w, tv);
          auto [d, rest] = general_emit(prepend(w, s_of(tv)));
          // exact rescaling: value(rest) == 2 v - alpha(d)
          Rational expected = 2 * v - alpha(d);
          CAPTURE(digit_char(d1));
          CAPTURE(digit_char(d2));
          CAPTURE(digit_char(d3));
          CHECK(Rational(0) <= expected);
          CHECK(expected <= Rational(1));
          CHECK(encloses(bounds(rest, 40), expected));
        }
}

TEST_CASE("general_emit leaves a 1/16 safety margin") {
  // over all values compatible with the inspected prefix, the emitted
  // digit must hold with slack: [lo-1/16, hi+1/16] cut to [0,1] inside
  // basic(d)
  const Rational margin = make_rational(1, 16);
  for (Digit d1 : kAllDigits)
    for (Digit d2 : kAllDigits)
      for (Digit d3 : kAllDigits) {
        std::vector<Digit> w{d1, d2, d3};
        Rational lo = word_value(w, Rational(0)) - margin;
        Rational hi = word_value(w, Rational(1)) + margin;
        if (lo < 0) lo = 0;
        if (hi > 1) hi = 1;
        auto [d, rest] = general_emit(prepend(w, zero()));
        Rational basic_lo = alpha(d) / 2;
        CAPTURE(digit_char(d1));
        CAPTURE(digit_char(d2));
        CAPTURE(digit_char(d3));
        CHECK(basic_lo <= lo);
        CHECK(hi <= basic_lo + make_rational(1, 2));
      }
}

TEST_CASE("general_emit inspects at most three digits") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 30; ++trial)
    CHECK_NOTHROW(general_emit(poison_after(random_word(rng, 3))));

  // two digits decide unless the pair sits on a rewrite boundary
  const std::pair<Digit, Digit> needs_third[] = {
      {Digit::R, Digit::L}, {Digit::C, Digit::L},
      {Digit::C, Digit::R}, {Digit::L, Digit::R}};
  const std::pair<Digit, Digit> two_enough[] = {
      {Digit::R, Digit::R}, {Digit::R, Digit::C}, {Digit::C, Digit::C},
      {Digit::L, Digit::L}, {Digit::L, Digit::C}};
  for (auto [a, b] : needs_third)
    CHECK_THROWS_AS(general_emit(poison_after({a, b})), std::logic_error);
  for (auto [a, b] : two_enough)
    CHECK_NOTHROW(general_emit(poison_after({a, b})));
}

TEST_CASE("e_series_step frozen trace") {
  ESeriesState s{1, 4, 6};
  // two doubling steps, then the 1/4! term is folded in
  ESeriesStep s1 = e_series_step(s);
  CHECK(!s1.term);
  CHECK(s1.state.y == 2);
  CHECK(s1.state.n == 4);
  CHECK(s1.state.theta == 6);

  ESeriesStep s2 = e_series_step(s1.state);
  CHECK(!s2.term);
  CHECK(s2.state.y == 4);

  ESeriesStep s3 = e_series_step(s2.state);
  REQUIRE(s3.term);
  CHECK(s3.term->first == 4);
  CHECK(s3.term->second == 24);
  CHECK(s3.state.y == 8);
  CHECK(s3.state.n == 5);
  CHECK(s3.state.theta == 24);

  ESeriesStep s4 = e_series_step(s3.state);
  CHECK(!s4.term);
  ESeriesStep s5 = e_series_step(s4.state);
  REQUIRE(s5.term);
  CHECK(s5.term->first == 16);
  CHECK(s5.term->second == 120);
}

TEST_CASE("e_series_step invariants hold for ten thousand steps") {
  ESeriesState s{1, 4, 6};
  mpz_class y_expected = 1;
  mpz_class fact = 6;  // (n-1)! alongside, one multiply per absorb
  for (int step = 0; step < 10000; ++step) {
    REQUIRE(s.theta == fact);
    // the scaled tail stays small enough to keep digits certain
    REQUIRE(4 * s.y <= s.theta * (s.n - 1));
    ESeriesStep next = e_series_step(s);
    y_expected *= 2;
    REQUIRE(next.state.y == y_expected);
    if (next.term) {
      CHECK(next.term->first == s.y);
      CHECK(next.term->second == next.state.theta);
      REQUIRE(next.state.n == s.n + 1);
      fact *= s.n;
    } else {
      REQUIRE(next.state.n == s.n);
    }
    s = next.state;
  }
  CHECK(s.n > 1000);  // the series genuinely advances
  mpz_class check;
  mpz_fac_ui(check.get_mpz_t(), s.n - 1);
  CHECK(s.theta == check);
}

TEST_CASE("number_e_minus2 matches the rational oracle") {
  DyadicBounds b = bounds(number_e_minus2(), 60);
  CertifiedValue o = oracle_e_minus2(40);
  CHECK(lower(b) <= o.lo);
  CHECK(o.hi <= upper(b));
}

TEST_CASE("sum_mult_d spot values") {
  Rational u = make_rational(1, 3), v = make_rational(1, 2);
  CHECK(encloses(bounds(sum_mult_d(Digit::L, s_of(u), s_of(v)), 40), u));
  CHECK(encloses(bounds(sum_mult_d(Digit::C, s_of(u), s_of(v)), 40),
                 u + v / 4));
  CHECK(encloses(bounds(sum_mult_d(Digit::R, s_of(u), s_of(v)), 40),
                 u + v / 2));
}

TEST_CASE("mult_a accumulates x + u*v") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    Rational x = random_rational(rng, 10) / 4;  // stay in mult's envelope
    Rational u = random_rational(rng, 10);
    Rational y = random_rational(rng, 10);
    DigitStream v4 = DigitStream::cons(
        Digit::L, DigitStream::cons(Digit::L, s_of(y)));
    Rational expected = x + u * (y / 4);
    CHECK(encloses(bounds(mult_a(s_of(x), s_of(u), v4), 40), expected));
  }
}

TEST_CASE("mult encloses products") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 150; ++trial) {
    Rational x = random_rational(rng, 12);
    Rational y = random_rational(rng, 12);
    CHECK(encloses(bounds(mult(s_of(x), s_of(y)), 40), x * y));
  }
  CHECK(encloses(bounds(mult(one(), one()), 30), Rational(1)));
  CHECK(encloses(bounds(mult(zero(), one()), 30), Rational(0)));
  CHECK(encloses(bounds(mult(s_of(make_rational(1, 2)),
                             s_of(make_rational(1, 2))), 40),
                 make_rational(1, 4)));
}

TEST_CASE("atan_inv matches the alternating-series oracle") {
  for (unsigned long k : {2ul, 3ul, 5ul, 10ul}) {
    DyadicBounds b = bounds(atan_inv(k), 50);
    CertifiedValue o = oracle_atan_inv(k, 40);
    CAPTURE(k);
    CHECK(lower(b) <= o.lo);
    CHECK(o.hi <= upper(b));
  }
  CHECK_THROWS_AS(atan_inv(1), std::invalid_argument);
  CHECK_THROWS_AS(atan_inv(0), std::invalid_argument);
}

TEST_CASE("pi_over_4 brackets the angle sum") {
  DyadicBounds b = bounds(pi_over_4(), 80);
  CertifiedValue a2 = oracle_atan_inv(2, 120);
  CertifiedValue a3 = oracle_atan_inv(3, 120);
  CHECK(lower(b) <= a2.lo + a3.lo);
  CHECK(a2.hi + a3.hi <= upper(b));
}
