#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pinforms {

/// One of the four structure families on a surface, indexed by the pair
/// (a, b) of mod-2 coefficients of its obstruction class a*w2 + b*w1^2:
///
///   (0,0) trivial   (1,0) pin+   (0,1) otilde   (1,1) pin-
///
/// Types add componentwise; the sum type governs the group law on forms.
struct StructureType {
  uint8_t a = 0;
  uint8_t b = 0;

  friend StructureType operator+(StructureType x, StructureType y) {
    return {uint8_t((x.a + y.a) & 1), uint8_t((x.b + y.b) & 1)};
  }
  auto operator<=>(const StructureType&) const = default;

  std::string_view name() const {
    if (a == 0 && b == 0) return "trivial";
    if (a == 1 && b == 0) return "pin+";
    if (a == 0 && b == 1) return "otilde";
    return "pin-";
  }

  static StructureType parse(std::string_view s) {
    if (s == "trivial") return {0, 0};
    if (s == "pin+") return {1, 0};
    if (s == "otilde") return {0, 1};
    if (s == "pin-") return {1, 1};
    throw std::invalid_argument("bad structure type: " + std::string(s));
  }
};

inline constexpr StructureType kTrivial{0, 0};
inline constexpr StructureType kPinPlus{1, 0};
inline constexpr StructureType kOTilde{0, 1};
inline constexpr StructureType kPinMinus{1, 1};

/// Fixed display and iteration order.
inline constexpr std::array<StructureType, 4> all_structure_types() {
  return {kTrivial, kPinPlus, kOTilde, kPinMinus};
}

}  // namespace pinforms
