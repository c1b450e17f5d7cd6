#include "xreal/series.hpp"

#include <cassert>
#include <stdexcept>

#include "xreal/basic_ops.hpp"
#include "xreal/conversions.hpp"

namespace xreal {

std::pair<Digit, DigitStream> general_emit(const DigitStream& v) {
  const StreamHead& h1 = v.force();
  const StreamHead& h2 = h1.tail.force();
  switch (h1.digit) {
    case Digit::R:
      // v >= 9/16 on every branch below, so R absorbs any |rho| <= 1/16.
      if (h2.digit != Digit::L) return {Digit::R, h1.tail};
      else {
        const StreamHead& h3 = h2.tail.force();
        if (h3.digit == Digit::L)  // RLL = CRL: v in [1/2, 9/16]
          return {Digit::C,
                  DigitStream::cons(Digit::R,
                                    DigitStream::cons(Digit::L, h3.tail))};
        return {Digit::R, h1.tail};
      }
    case Digit::C:
      if (h2.digit == Digit::C) return {Digit::C, h1.tail};
      if (h2.digit == Digit::L) {
        const StreamHead& h3 = h2.tail.force();
        if (h3.digit == Digit::L)  // CLL = LRL: v in [1/4, 3/8]
          return {Digit::L,
                  DigitStream::cons(Digit::R,
                                    DigitStream::cons(Digit::L, h3.tail))};
        return {Digit::C, h1.tail};
      }
      {
        const StreamHead& h3 = h2.tail.force();
        if (h3.digit == Digit::R)  // CRR = RLR: v in [5/8, 3/4]
          return {Digit::R,
                  DigitStream::cons(Digit::L,
                                    DigitStream::cons(Digit::R, h3.tail))};
        return {Digit::C, h1.tail};
      }
    case Digit::L:
      if (h2.digit != Digit::R) return {Digit::L, h1.tail};
      else {
        const StreamHead& h3 = h2.tail.force();
        if (h3.digit == Digit::R)  // LRR = CLR: v in [3/8, 1/2]
          return {Digit::C,
                  DigitStream::cons(Digit::L,
                                    DigitStream::cons(Digit::R, h3.tail))};
        return {Digit::L, h1.tail};
      }
  }
  assert(false);
  return {Digit::L, zero()};
}

ESeriesStep e_series_step(const ESeriesState& s) {
  assert(s.n >= 2);
  mpz_class mu = s.theta * (s.n - 1);  // 1/mu bounds the tail at n
  if (8 * s.y <= mu) {
    return {{2 * s.y, s.n, s.theta}, std::nullopt};
  }
  mpz_class theta2 = mu + s.theta;  // theta * n = n!... keeps theta = (n-1)!
  std::pair<mpz_class, mpz_class> term{s.y, theta2};
  return {{2 * s.y, s.n + 1, std::move(theta2)}, std::move(term)};
}

DigitStream e_series(DigitStream x, ESeriesState s) {
  return DigitStream([x = std::move(x), s = std::move(s)]() -> StreamHead {
    ESeriesStep step = e_series_step(s);
    DigitStream v =
        step.term ? add(x, rat_to_stream(step.term->first, step.term->second))
                  : x;
    return series_body([](DigitStream nv, const ESeriesState& ns) {
                         return e_series(std::move(nv), ns);
                       },
                       std::move(v), std::move(step.state))
        .force();
  });
}

DigitStream number_e_minus2() {
  static const DigitStream e =
      e_series(add(rat_to_stream(1, 2), rat_to_stream(1, 6)),
               ESeriesState{1, 4, 6});
  return e;
}

DigitStream sum_mult_d(Digit d, DigitStream u, DigitStream v) {
  switch (d) {
    case Digit::L:
      return u;
    case Digit::C:
      return add(std::move(u),
                 DigitStream::cons(Digit::L,
                                   DigitStream::cons(Digit::L, std::move(v))));
    case Digit::R:
      return add(std::move(u), DigitStream::cons(Digit::L, std::move(v)));
  }
  assert(false);
  return u;
}

DigitStream mult_a(DigitStream x, DigitStream u, DigitStream v) {
  return DigitStream(
      [x = std::move(x), u = std::move(u), v = std::move(v)]() -> StreamHead {
        const StreamHead& hu = u.force();
        return series_body(
                   [](DigitStream nx, const std::pair<DigitStream, DigitStream>&
                                          st) {
                     return mult_a(std::move(nx), st.first, st.second);
                   },
                   sum_mult_d(hu.digit, x, v), std::make_pair(hu.tail, v))
            .force();
      });
}

DigitStream mult(DigitStream x, DigitStream y) {
  DigitStream y4 = DigitStream::cons(
      Digit::L, DigitStream::cons(Digit::L, std::move(y)));
  return mult2(mult2(mult_a(zero(), std::move(x), std::move(y4))));
}

namespace {

// arctan(1/k) = sum_i a_i with positive grouped terms
//   a_i = 1/((4i+1) k^(4i+1)) - 1/((4i+3) k^(4i+3)),
// tail_n = sum_{i>=n} a_i < 1/((4n+1) k^(4n+1)).
struct AtanState {
  unsigned long k;
  mpz_class y;
  unsigned long n;
  mpz_class kpow;  // k^(4n+1)
};

DigitStream atan_series(DigitStream x, AtanState s) {
  return DigitStream([x = std::move(x), s = std::move(s)]() mutable
                     -> StreamHead {
    // Absorb terms until y * tail bound <= 1/8. One iteration suffices
    // for k >= 2 after the first step; the loop keeps it robust.
    const mpz_class k2 = mpz_class(s.k) * s.k;
    const mpz_class k4 = k2 * k2;
    mpz_class den_bound = (4 * s.n + 1) * s.kpow;
    while (8 * s.y > den_bound) {
      // term = y * ((4n+3)k^2 - (4n+1)) / ((4n+1)(4n+3) k^(4n+3))
      mpz_class p = s.y * ((4 * s.n + 3) * k2 - (4 * s.n + 1));
      mpz_class q = (4 * s.n + 1) * (4 * s.n + 3) * s.kpow * k2;
      x = add(std::move(x), rat_to_stream(std::move(p), std::move(q)));
      s.n += 1;
      s.kpow *= k4;
      den_bound = (4 * s.n + 1) * s.kpow;
    }
    s.y *= 2;
    return series_body([](DigitStream nx, const AtanState& ns) {
                         return atan_series(std::move(nx), ns);
                       },
                       std::move(x), std::move(s))
        .force();
  });
}

}  // namespace

DigitStream atan_inv(unsigned long k) {
  if (k < 2) throw std::invalid_argument("atan_inv: need k >= 2");
  return atan_series(zero(), AtanState{k, 1, 0, mpz_class(k)});
}

DigitStream pi_over_4() { return add(atan_inv(2), atan_inv(3)); }

}  // namespace xreal
