#include "xreal/conversions.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace xreal {

DigitStream rat_to_stream(mpz_class p, mpz_class q) {
  if (q <= 0 || p < 0 || p > q)
    throw std::invalid_argument("rat_to_stream: need 0 <= p <= q, q > 0");
  return DigitStream([p = std::move(p), q = std::move(q)]() -> StreamHead {
    mpz_class p2 = 2 * p;
    if (p2 <= q) return {Digit::L, rat_to_stream(std::move(p2), q)};
    return {Digit::R, rat_to_stream(p2 - q, q)};
  });
}

DigitStream stream_of_cut(CutPredicate decide) {
  return DigitStream([decide = std::move(decide)]() -> StreamHead {
    if (decide(1, 2)) {
      CutPredicate next = [decide](const mpz_class& a, const mpz_class& b) {
        return decide(a, 2 * b);
      };
      return {Digit::L, stream_of_cut(std::move(next))};
    }
    CutPredicate next = [decide](const mpz_class& a, const mpz_class& b) {
      return decide(a + b, 2 * b);
    };
    return {Digit::R, stream_of_cut(std::move(next))};
  });
}

namespace {

DigitStream cauchy_from(CauchyInput in, unsigned long n, mpz_class bn,
                        mpz_class bd) {
  return DigitStream([in = std::move(in), n, bn = std::move(bn),
                      bd = std::move(bd)]() -> StreamHead {
    auto [vn, vd] = in.values(in.modulus(static_cast<long>(n) + 3));
    assert(vd > 0 && bd > 0);
    // a = 2^n (v - b); branch on a <= 3/8 | a <= 5/8 | else, scaled by
    // 8*vd*bd to stay integral.
    mpz_class lhs = (vn * bd - vd * bn) << (n + 3);
    mpz_class vdbd = vd * bd;
    if (lhs <= 3 * vdbd) {
      return {Digit::L, cauchy_from(in, n + 1, bn, bd)};
    }
    if (lhs <= 5 * vdbd) {
      // b += 1/2^(n+2)
      mpz_class nbd = bd << (n + 2);
      mpz_class nbn = (bn << (n + 2)) + bd;
      return {Digit::C, cauchy_from(in, n + 1, std::move(nbn), std::move(nbd))};
    }
    // b += 1/2^(n+1)
    mpz_class nbd = bd << (n + 1);
    mpz_class nbn = (bn << (n + 1)) + bd;
    return {Digit::R, cauchy_from(in, n + 1, std::move(nbn), std::move(nbd))};
  });
}

}  // namespace

DigitStream stream_of_cauchy(CauchyInput in) {
  return cauchy_from(std::move(in), 0, 0, 1);
}

namespace {

mpz_class ten_pow(std::size_t d) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, d);
  return r;
}

// floor(x * 10^digits / 2^k) for x = lo/2^k given as an integer numerator.
mpz_class decimal_floor(const mpz_class& num, const mpz_class& p10,
                        unsigned long k) {
  mpz_class t = num * p10;
  return t >> k;
}

}  // namespace

std::string decimal_render(const DigitStream& s, std::size_t digits) {
  if (digits == 0) return "0.";
  const unsigned long cap = 4 * digits + 32;
  const mpz_class p10 = ten_pow(digits);

  DyadicBounds b;
  bool fixed = false;
  for (unsigned long n = 1;;) {
    b = bounds(s, n);
    mpz_class dlo = decimal_floor(b.lo, p10, b.k);
    mpz_class dhi = decimal_floor(b.hi, p10, b.k);
    if (dlo == dhi) {
      fixed = true;
      break;
    }
    if (n >= cap) break;
    n = std::min(2 * n, cap);
  }

  std::string out = "0.";
  if (fixed) {
    std::string ds = decimal_floor(b.lo, p10, b.k).get_str();
    out.append(digits - ds.size(), '0');
    out += ds;
    return out;
  }

  // Straddle at the cap: largest certified prefix, then a marker.
  std::size_t lo_fix = 0, hi_fix = digits;  // certified iff j <= lo_fix
  while (lo_fix < hi_fix) {
    std::size_t j = (lo_fix + hi_fix + 1) / 2;
    mpz_class pj = ten_pow(j);
    if (decimal_floor(b.lo, pj, b.k) == decimal_floor(b.hi, pj, b.k))
      lo_fix = j;
    else
      hi_fix = j - 1;
  }
  if (lo_fix > 0) {
    std::string ds = decimal_floor(b.lo, ten_pow(lo_fix), b.k).get_str();
    out.append(lo_fix - ds.size(), '0');
    out += ds;
  }
  out += '?';
  return out;
}

}  // namespace xreal
