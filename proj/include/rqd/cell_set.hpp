#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace rqd {

// Fixed-width bitmask over cell indices. Every search kernel indexes cells
// densely (x * rows + y or grid-local), so 256 bits covers boards up to 16x16.
class CellSet {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = kCapacity / 64;

  constexpr CellSet() = default;

  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Index of the lowest set bit, or -1.
  constexpr int first() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  constexpr bool intersects(const CellSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  constexpr bool contains(const CellSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  constexpr CellSet& operator|=(const CellSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr CellSet& operator&=(const CellSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // this & ~o
  constexpr CellSet& subtract(const CellSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend constexpr CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
  friend constexpr CellSet minus(CellSet a, const CellSet& b) { return a.subtract(b); }

  constexpr bool operator==(const CellSet&) const = default;

  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace rqd
