#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "genknot/enum_set.hpp"

namespace genknot {

// The five crossing tags a generalized diagram may carry. Only the two real
// types are classical; the sign of a real crossing is carried by the tag.
enum class CrossingType : std::uint8_t { RealPos, RealNeg, Virtual, Flat, Singular };

inline constexpr std::array<CrossingType, 5> kCrossingTypes{
    CrossingType::RealPos, CrossingType::RealNeg, CrossingType::Virtual, CrossingType::Flat,
    CrossingType::Singular};

using CrossingTypeSet = EnumSet<CrossingType, 5>;

constexpr bool is_real(CrossingType t) {
  return t == CrossingType::RealPos || t == CrossingType::RealNeg;
}

// Text token used by the diagram and graph formats: R+ R- V F S.
std::string_view crossing_token(CrossingType t);
std::optional<CrossingType> parse_crossing_token(std::string_view token);

// Long name, e.g. "RealPos".
std::string_view crossing_name(CrossingType t);

}  // namespace genknot
