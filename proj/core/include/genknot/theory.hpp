#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "genknot/crossing.hpp"
#include "genknot/enum_set.hpp"

namespace genknot {

enum class MoveType : std::uint8_t {
  R1, R2, R3,
  V1, V2, V3, V4,
  F1, F2, F3, F4,
  W1, W2,
  S1, S2, S3,
  GR1, GR2, GR3, GR4,
};

using MoveSet = EnumSet<MoveType, 20>;

std::string_view move_name(MoveType m);

// GR4 mixes two crossing types, so it says nothing about a diagram that uses
// fewer than two distinct types. Every other move is always meaningful.
bool move_meaningful(MoveType m, CrossingTypeSet present);

enum class Theory : std::uint8_t {
  Classical,
  Virtual,
  FlatVirtual,
  Welded,
  Unrestricted,
  Singular,
  VirtualSingular,
  Doodle,
  VirtualDoodle,
};

// One row of the theory table: which crossings a diagram may use, which moves
// generate equivalence, and which crossing types admit all four generalized
// Reidemeister-type moves (and therefore may be used for the braid-index
// bound). gr_compatible is always a subset of allowed_crossings.
struct TheoryFamily {
  Theory theory;
  std::string_view name;
  CrossingTypeSet allowed_crossings;
  MoveSet allowed_moves;
  CrossingTypeSet gr_compatible;

  friend bool operator==(const TheoryFamily&, const TheoryFamily&) = default;
};

const TheoryFamily& theory_family(Theory t);
std::span<const TheoryFamily> theory_table();

std::optional<Theory> parse_theory_name(std::string_view name);
std::string_view theory_name(Theory t);

// Returns a copy of `family` with a user-chosen GR-compatible set. Throws
// std::invalid_argument if `gr` is not contained in the allowed crossings.
TheoryFamily with_gr_compatible(const TheoryFamily& family, CrossingTypeSet gr);

}  // namespace genknot
