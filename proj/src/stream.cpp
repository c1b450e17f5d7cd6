#include "xreal/stream.hpp"

#include <cassert>
#include <utility>

namespace xreal {

DigitStream::DigitStream(Thunk thunk)
    : cell_(std::make_shared<detail::StreamCell>()) {
  cell_->thunk = std::move(thunk);
}

DigitStream DigitStream::cons(Digit d, DigitStream tail) {
  auto cell = std::make_shared<detail::StreamCell>();
  cell->value = StreamHead{d, std::move(tail)};
  cell->forced.store(true, std::memory_order_release);
  return DigitStream(std::move(cell));
}

const StreamHead& DigitStream::force() const {
  assert(cell_ && "forcing an empty DigitStream handle");
  detail::StreamCell* cell = cell_.get();
  if (!cell->forced.load(std::memory_order_acquire)) {
    std::call_once(cell->once, [cell] {
      cell->value = cell->thunk();
      cell->thunk = nullptr;
      cell->forced.store(true, std::memory_order_release);
    });
  }
  return cell->value;
}

Digit DigitStream::head() const { return force().digit; }

DigitStream DigitStream::tail() const { return force().tail; }

// zero/one are single pre-forced cells whose tail is the cell itself;
// the deliberate self-reference pins them for the whole program.
DigitStream zero() {
  static const DigitStream z = [] {
    auto cell = std::make_shared<detail::StreamCell>();
    cell->value = StreamHead{Digit::L, DigitStream(cell)};
    cell->forced.store(true, std::memory_order_release);
    return DigitStream(std::move(cell));
  }();
  return z;
}

DigitStream one() {
  static const DigitStream o = [] {
    auto cell = std::make_shared<detail::StreamCell>();
    cell->value = StreamHead{Digit::R, DigitStream(cell)};
    cell->forced.store(true, std::memory_order_release);
    return DigitStream(std::move(cell));
  }();
  return o;
}

std::vector<Digit> take(const DigitStream& s, std::size_t n) {
  std::vector<Digit> out;
  out.reserve(n);
  DigitStream cur = s;
  for (std::size_t i = 0; i < n; ++i) {
    const StreamHead& h = cur.force();
    out.push_back(h.digit);
    cur = h.tail;
  }
  return out;
}

std::string digit_string(const DigitStream& s, std::size_t n) {
  std::string out;
  out.reserve(n);
  for (Digit d : take(s, n)) out.push_back(digit_char(d));
  return out;
}

}  // namespace xreal
