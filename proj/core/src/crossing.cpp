#include "genknot/crossing.hpp"

namespace genknot {

std::string_view crossing_token(CrossingType t) {
  switch (t) {
    case CrossingType::RealPos: return "R+";
    case CrossingType::RealNeg: return "R-";
    case CrossingType::Virtual: return "V";
    case CrossingType::Flat: return "F";
    case CrossingType::Singular: return "S";
  }
  return "?";
}

std::optional<CrossingType> parse_crossing_token(std::string_view token) {
  for (CrossingType t : kCrossingTypes) {
    if (crossing_token(t) == token) return t;
  }
  return std::nullopt;
}

std::string_view crossing_name(CrossingType t) {
  switch (t) {
    case CrossingType::RealPos: return "RealPos";
    case CrossingType::RealNeg: return "RealNeg";
    case CrossingType::Virtual: return "Virtual";
    case CrossingType::Flat: return "Flat";
    case CrossingType::Singular: return "Singular";
  }
  return "?";
}

}  // namespace genknot
