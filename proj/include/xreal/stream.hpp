#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "xreal/digit.hpp"

namespace xreal {

class DigitStream;
struct StreamHead;

namespace detail {
struct StreamCell;
}

// An infinite digit stream, evaluated call-by-need. Cells are memoized
// and immutable once forced; forcing from several threads is safe and
// idempotent (later forcings observe the first result). Every operation
// that returns a DigitStream is corecursive with a guarded head: forcing
// one digit performs a bounded amount of work on the inputs.
class DigitStream {
 public:
  using Thunk = std::function<StreamHead()>;

  DigitStream() noexcept = default;  // empty handle; must be assigned before use
  explicit DigitStream(Thunk thunk);

  static DigitStream cons(Digit d, DigitStream tail);

  bool valid() const noexcept { return static_cast<bool>(cell_); }

  Digit head() const;
  DigitStream tail() const;
  const StreamHead& force() const;

 private:
  friend DigitStream zero();
  friend DigitStream one();

  explicit DigitStream(std::shared_ptr<detail::StreamCell> cell) noexcept
      : cell_(std::move(cell)) {}

  std::shared_ptr<detail::StreamCell> cell_;
};

struct StreamHead {
  Digit digit;
  DigitStream tail;
};

namespace detail {
struct StreamCell {
  std::atomic<bool> forced{false};
  std::once_flag once;
  DigitStream::Thunk thunk;
  StreamHead value{Digit::L, {}};
};
}  // namespace detail

// The constant streams 0 = LLL... and 1 = RRR... (single shared cells).
DigitStream zero();
DigitStream one();

std::vector<Digit> take(const DigitStream& s, std::size_t n);

// First n digits as 'L'/'C'/'R', most significant first.
std::string digit_string(const DigitStream& s, std::size_t n);

}  // namespace xreal
