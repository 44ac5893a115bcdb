#pragma once

#include <chrono>
#include <cstdint>

namespace edcol {

/// Wall-clock budget for the exhaustive searches. Checking is amortised:
/// `expired()` only reads the clock every 256 calls.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline unlimited() { return Deadline(); }
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.limited_ = true;
    d.end_ = Clock::now() + budget;
    return d;
  }
  static Deadline after_ms(std::int64_t ms) {
    return ms <= 0 ? unlimited() : after(std::chrono::milliseconds(ms));
  }

  bool expired() {
    if (!limited_) return false;
    if (hit_) return true;
    if ((++calls_ & 0xFF) != 0) return false;
    hit_ = Clock::now() >= end_;
    return hit_;
  }
  bool limited() const noexcept { return limited_; }

 private:
  Deadline() = default;
  bool limited_ = false;
  bool hit_ = false;
  std::uint32_t calls_ = 0;
  Clock::time_point end_{};
};

}  // namespace edcol
