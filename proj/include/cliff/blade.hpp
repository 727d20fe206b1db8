#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cliff/errors.hpp"
#include "cliff/signature.hpp"

namespace cliff {

inline constexpr std::size_t kMaxBladeGenerators = 32;

// Basis monomial e_{i1} e_{i2} ... with i1 < i2 < ..., stored as a bitmask.
struct Blade {
  std::uint32_t bits = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t b) : bits(b) {}

  static Blade from_members(const std::vector<std::size_t> &members) {
    std::uint32_t b = 0;
    for (auto i : members) {
      if (i >= kMaxBladeGenerators)
        throw config_error("generator index " + std::to_string(i) +
                           " exceeds blade width");
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (b & bit)
        throw config_error("repeated generator " + std::to_string(i) +
                           " in blade");
      b |= bit;
    }
    return Blade{b};
  }

  static constexpr Blade generator(std::size_t i) {
    return Blade{std::uint32_t{1} << i};
  }

  constexpr int grade() const noexcept { return std::popcount(bits); }
  constexpr bool is_scalar() const noexcept { return bits == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits; b; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend constexpr auto operator<=>(Blade, Blade) = default;
};

struct BladeProduct {
  int sign;
  Blade blade;
  friend bool operator==(const BladeProduct &, const BladeProduct &) = default;
};

// Number of transpositions needed to move the generators of b past those of a
// into ascending order.
constexpr int reorder_parity(std::uint32_t a, std::uint32_t b) noexcept {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps & 1;
}

inline BladeProduct blade_mul(Blade a, Blade b, const Signature &sig) {
  const std::uint32_t used = a.bits | b.bits;
  if (used != 0 && std::bit_width(used) > sig.size())
    throw config_error("blade uses generator " +
                       std::to_string(std::bit_width(used) - 1) +
                       " beyond signature of size " +
                       std::to_string(sig.size()));
  int sign = reorder_parity(a.bits, b.bits) ? -1 : 1;
  if (std::popcount(a.bits & b.bits & sig.negative_mask()) & 1)
    sign = -sign;
  return {sign, Blade{a.bits ^ b.bits}};
}

// Closed-form sign of the four-group actions on a grade-g blade.
constexpr int reversion_sign(int g) noexcept {
  return ((g * (g - 1) / 2) & 1) ? -1 : 1;
}
constexpr int grade_involution_sign(int g) noexcept { return (g & 1) ? -1 : 1; }
constexpr int conjugation_sign(int g) noexcept {
  return ((g * (g + 1) / 2) & 1) ? -1 : 1;
}

// Scalar value of b*b: reversal sign times the product of member squares.
inline int blade_square(Blade b, const Signature &sig) {
  int s = reversion_sign(b.grade());
  if (std::popcount(b.bits & sig.negative_mask()) & 1)
    s = -s;
  return s;
}

} // namespace cliff
