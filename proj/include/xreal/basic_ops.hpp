#pragma once

#include <optional>
#include <span>

#include "xreal/stream.hpp"

namespace xreal {

// One transition of the half_sum automaton. The pattern matches one or
// two digits of each input (a2/b2 empty = depth one); on a match the
// automaton emits `out` and recurses on the tails, with push1/push2
// prepended to inputs that were matched at depth two. Rewritten heads
// keep every stream variable at the same total depth on both sides, so
// the defining identity
//   (u + v)/2 == lift_value(out, (u' + v')/2)
// holds exactly for all values in the pattern's intervals.
struct HalfSumCase {
  Digit a;
  std::optional<Digit> a2;
  Digit b;
  std::optional<Digit> b2;
  Digit out;
  std::optional<Digit> push1;
  std::optional<Digit> push2;
};

// The full 25-case table, ordered depth (1,1), then (2,1), then (2,2).
// Cases are mutually exclusive and cover every depth-2 pattern pair.
std::span<const HalfSumCase> half_sum_table();

// Unique table case matching the given prefix knowledge (nullopt = digit
// not yet inspected), or nullptr if a deeper digit is needed.
const HalfSumCase* half_sum_find(Digit a, std::optional<Digit> a2, Digit b,
                                 std::optional<Digit> b2);

// (x + y)/2. Total on [0,1]^2; emits its k-th digit after forcing at
// most k+1 digits of each input.
DigitStream half_sum(DigitStream x, DigitStream y);

// x + y for x + y <= 1 (clamps at 1 otherwise, by mult2's saturation).
DigitStream add(DigitStream x, DigitStream y);

// 2x, meaningful for x <= 1/2; saturates at 1 for larger values.
DigitStream mult2(DigitStream x);

// 1 - x, digitwise L<->R swap.
DigitStream one_minus(DigitStream x);

// x - 1/2, meaningful for x >= 1/2; clamps at 0 for smaller values.
DigitStream minus_half(DigitStream x);

// x - y for y <= x (clamps at 0 otherwise).
DigitStream sub(DigitStream x, DigitStream y);

}  // namespace xreal
