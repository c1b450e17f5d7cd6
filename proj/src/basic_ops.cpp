#include "xreal/basic_ops.hpp"

#include <array>
#include <cassert>

namespace xreal {

namespace {

constexpr Digit L = Digit::L;
constexpr Digit C = Digit::C;
constexpr Digit R = Digit::R;
constexpr std::optional<Digit> _ = std::nullopt;

// Derivation sketch. With pattern constants c1, c2 (value offsets of the
// matched prefixes) and sum interval S = [(c1+c2)/2, (c1+c2)/2 + span],
// a digit d may be emitted iff S lies inside d's basic interval, and the
// rewritten heads must satisfy alpha(push1)/2 + alpha(push2)/2 =
// 2(c1+c2) - 2 alpha(d) (taking 0 for inputs matched at depth one).
// Heads (L,C), (C,L), (R,C), (C,R) leave S too wide for any digit, so
// the first input is deepened; a C second digit still straddles, and the
// second input is deepened too. That terminates: the 12 depth-(2,2)
// cases below all admit a digit. Where two digits are admissible the
// C-preferring, mirror-symmetric choice is taken, which makes the whole
// table invariant under the L<->R involution.
constexpr std::array<HalfSumCase, 25> kHalfSumTable = {{
    // depth (1,1)
    {L, _, L, _, L, _, _},
    {R, _, R, _, R, _, _},
    {C, _, C, _, C, _, _},
    {L, _, R, _, C, _, _},
    {R, _, L, _, C, _, _},
    // depth (2,1): first input deepened
    {L, L, C, _, L, R, _},
    {L, R, C, _, C, L, _},
    {C, L, L, _, L, R, _},
    {C, R, L, _, C, L, _},
    {R, L, C, _, C, R, _},
    {R, R, C, _, R, L, _},
    {C, L, R, _, C, R, _},
    {C, R, R, _, R, L, _},
    // depth (2,2): both inputs deepened
    {L, C, C, L, L, R, C},
    {L, C, C, C, C, L, L},
    {L, C, C, R, C, L, C},
    {C, C, L, L, L, R, C},
    {C, C, L, C, C, L, L},
    {C, C, L, R, C, C, L},
    {R, C, C, L, C, R, C},
    {R, C, C, C, C, R, R},
    {R, C, C, R, R, L, C},
    {C, C, R, L, C, C, R},
    {C, C, R, C, C, R, R},
    {C, C, R, R, R, L, C},
}};

bool case_matches(const HalfSumCase& e, Digit a, std::optional<Digit> a2,
                  Digit b, std::optional<Digit> b2) {
  if (e.a != a || e.b != b) return false;
  if (e.a2 && (!a2 || *a2 != *e.a2)) return false;
  if (e.b2 && (!b2 || *b2 != *e.b2)) return false;
  return true;
}

}  // namespace

std::span<const HalfSumCase> half_sum_table() { return kHalfSumTable; }

const HalfSumCase* half_sum_find(Digit a, std::optional<Digit> a2, Digit b,
                                 std::optional<Digit> b2) {
  for (const HalfSumCase& e : kHalfSumTable)
    if (case_matches(e, a, a2, b, b2)) return &e;
  return nullptr;
}

DigitStream half_sum(DigitStream x, DigitStream y) {
  return DigitStream([x = std::move(x), y = std::move(y)]() -> StreamHead {
    const StreamHead& hx = x.force();
    const StreamHead& hy = y.force();
    std::optional<Digit> a2, b2;
    const HalfSumCase* e = half_sum_find(hx.digit, a2, hy.digit, b2);
    if (!e) {
      a2 = hx.tail.head();
      e = half_sum_find(hx.digit, a2, hy.digit, b2);
      if (!e) {
        b2 = hy.tail.head();
        e = half_sum_find(hx.digit, a2, hy.digit, b2);
      }
    }
    assert(e && "half_sum table is incomplete");
    DigitStream nx =
        e->a2 ? DigitStream::cons(*e->push1, hx.tail.tail()) : hx.tail;
    DigitStream ny =
        e->b2 ? DigitStream::cons(*e->push2, hy.tail.tail()) : hy.tail;
    return {e->out, half_sum(std::move(nx), std::move(ny))};
  });
}

DigitStream mult2(DigitStream x) {
  return DigitStream([x = std::move(x)]() -> StreamHead {
    const StreamHead& h = x.force();
    switch (h.digit) {
      case Digit::L:
        return h.tail.force();  // 2(v/2) = v: the tail itself
      case Digit::C:
        return {Digit::R, mult2(h.tail)};
      case Digit::R:
        return {Digit::R, one()};  // saturate
    }
    assert(false);
    return {Digit::L, zero()};
  });
}

DigitStream one_minus(DigitStream x) {
  return DigitStream([x = std::move(x)]() -> StreamHead {
    const StreamHead& h = x.force();
    Digit d = h.digit == Digit::L   ? Digit::R
              : h.digit == Digit::R ? Digit::L
                                    : Digit::C;
    return {d, one_minus(h.tail)};
  });
}

DigitStream minus_half(DigitStream x) {
  return DigitStream([x = std::move(x)]() -> StreamHead {
    const StreamHead& h = x.force();
    switch (h.digit) {
      case Digit::R:
        return {Digit::L, h.tail};
      case Digit::C:
        return {Digit::L, minus_half(h.tail)};
      case Digit::L:
        return zero().force();  // clamp
    }
    assert(false);
    return {Digit::L, zero()};
  });
}

DigitStream add(DigitStream x, DigitStream y) {
  return mult2(half_sum(std::move(x), std::move(y)));
}

DigitStream sub(DigitStream x, DigitStream y) {
  return mult2(minus_half(half_sum(std::move(x), one_minus(std::move(y)))));
}

}  // namespace xreal
