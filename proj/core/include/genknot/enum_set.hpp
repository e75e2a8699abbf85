#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace genknot {

// Fixed-size set over a dense enum whose enumerators are 0..N-1.
template <typename E, std::size_t N>
class EnumSet {
  static_assert(N <= 32, "EnumSet holds at most 32 enumerators");

 public:
  constexpr EnumSet() = default;
  constexpr EnumSet(std::initializer_list<E> items) {
    for (E e : items) insert(e);
  }

  static constexpr EnumSet full() {
    EnumSet s;
    s.bits_ = N == 32 ? ~0u : ((1u << N) - 1u);
    return s;
  }

  constexpr void insert(E e) { bits_ |= bit(e); }
  constexpr void erase(E e) { bits_ &= ~bit(e); }
  constexpr bool contains(E e) const { return (bits_ & bit(e)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(EnumSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr EnumSet operator|(EnumSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr EnumSet operator&(EnumSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr EnumSet without(EnumSet o) const { return from_bits(bits_ & ~o.bits_); }

  std::vector<E> items() const {
    std::vector<E> out;
    for (std::size_t i = 0; i < N; ++i) {
      if (bits_ & (1u << i)) out.push_back(static_cast<E>(i));
    }
    return out;
  }

  friend constexpr bool operator==(EnumSet, EnumSet) = default;

 private:
  static constexpr std::uint32_t bit(E e) { return 1u << static_cast<std::uint32_t>(e); }
  static constexpr EnumSet from_bits(std::uint32_t b) {
    EnumSet s;
    s.bits_ = b;
    return s;
  }

  std::uint32_t bits_ = 0;
};

}  // namespace genknot
