#include "doctest.h"
#include "test_util.hpp"
#include "xreal/oracle.hpp"

using namespace xreal;

TEST_CASE("oracle_e_minus2 small cases are exact") {
  CertifiedValue two = oracle_e_minus2(2);
  CHECK(two.lo == make_rational(1, 2));
  CHECK(two.hi == make_rational(3, 4));

  CertifiedValue three = oracle_e_minus2(3);
  CHECK(three.lo == make_rational(2, 3));
  CHECK(three.hi == make_rational(2, 3) + make_rational(1, 18));
  CHECK(width(three) == make_rational(1, 18));
}

TEST_CASE("oracle_e_minus2 encloses e - 2") {
  CertifiedValue v = oracle_e_minus2(20);
  CHECK(v.lo > make_rational(718281828, 1000000000));
  CHECK(v.hi < make_rational(718281829, 1000000000));
}

TEST_CASE("oracle_e_minus2 enclosures nest and shrink") {
  CertifiedValue prev = oracle_e_minus2(2);
  for (unsigned long t = 3; t <= 30; ++t) {
    CertifiedValue cur = oracle_e_minus2(t);
    CHECK(prev.lo <= cur.lo);
    CHECK(cur.hi <= prev.hi);
    CHECK(width(cur) < width(prev));
    prev = cur;
  }
}

TEST_CASE("oracle_e_minus2 converges fast") {
  CertifiedValue v = oracle_e_minus2(300);
  CHECK(width(v) < make_rational(1, pow2(1000)));
}

TEST_CASE("oracle_atan_inv small cases are exact") {
  CertifiedValue one = oracle_atan_inv(2, 1);
  CHECK(one.lo == make_rational(11, 24));
  CHECK(one.hi == make_rational(1, 2));
  CHECK(width(one) == make_rational(1, 24));

  CertifiedValue two = oracle_atan_inv(2, 2);
  CHECK(two.lo == make_rational(11, 24));
  CHECK(two.hi == make_rational(11, 24) + make_rational(1, 160));
}

TEST_CASE("oracle_atan_inv enclosures nest") {
  for (unsigned long k = 2; k <= 5; ++k) {
    CertifiedValue prev = oracle_atan_inv(k, 1);
    for (unsigned long t = 2; t <= 25; ++t) {
      CertifiedValue cur = oracle_atan_inv(k, t);
      CHECK(prev.lo <= cur.lo);
      CHECK(cur.hi <= prev.hi);
      CHECK(width(cur) < width(prev));
      prev = cur;
    }
  }
}

TEST_CASE("machin-style angle sum brackets pi/4") {
  CertifiedValue a = oracle_atan_inv(2, 60);
  CertifiedValue b = oracle_atan_inv(3, 60);
  Rational lo = a.lo + b.lo;
  Rational hi = a.hi + b.hi;
  CHECK(lo > make_rational(785398163, 1000000000));
  CHECK(hi < make_rational(785398164, 1000000000));
}

TEST_CASE("check_contains distinguishes points and intervals") {
  DyadicBounds b{mpz_class(2), mpz_class(4), 3};  // [1/4, 1/2]
  CHECK(check_contains(b, certified_point(make_rational(1, 3))));
  CHECK(check_contains(b, certified_point(make_rational(1, 4))));
  CHECK(!check_contains(b, certified_point(make_rational(9, 16))));
  // interval case: any overlap counts
  CHECK(check_contains(b, CertifiedValue{make_rational(3, 8),
                                         make_rational(7, 8)}));
  CHECK(!check_contains(b, CertifiedValue{make_rational(5, 8),
                                          make_rational(7, 8)}));
}
