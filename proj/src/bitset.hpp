#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace edcol::detail {

/// Fixed-size bitset over 0..size-1 sized at runtime.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

  void set(int i) { words_[idx(i)] |= bit(i); }
  void reset(int i) { words_[idx(i)] &= ~bit(i); }
  bool test(int i) const { return (words_[idx(i)] & bit(i)) != 0; }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  /// Smallest member, or -1.
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    return -1;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) f(static_cast<int>(k * 64) + std::countr_zero(w));
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i) >> 6; }
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }
  std::vector<std::uint64_t> words_;
};

}  // namespace edcol::detail
