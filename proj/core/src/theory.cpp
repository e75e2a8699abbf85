#include "genknot/theory.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace genknot {
namespace {

using enum MoveType;
using CT = CrossingType;

constexpr CrossingTypeSet kReal{CT::RealPos, CT::RealNeg};
constexpr CrossingTypeSet kRealVirtual{CT::RealPos, CT::RealNeg, CT::Virtual};
constexpr CrossingTypeSet kFlatVirtual{CT::Flat, CT::Virtual};
constexpr CrossingTypeSet kVirtualOnly{CT::Virtual};

constexpr MoveSet kClassicalMoves{R1, R2, R3};
constexpr MoveSet kVirtualMoves{R1, R2, R3, V1, V2, V3, V4};

const std::array<TheoryFamily, 9> kTable{{
    {Theory::Classical, "classical", kReal, kClassicalMoves, kReal},
    {Theory::Virtual, "virtual", kRealVirtual, kVirtualMoves, kVirtualOnly},
    {Theory::FlatVirtual, "flat_virtual", kFlatVirtual, MoveSet{F1, F2, F3, F4, V1, V2, V3}, {}},
    {Theory::Welded, "welded", kRealVirtual, kVirtualMoves | MoveSet{W1}, kVirtualOnly},
    {Theory::Unrestricted, "unrestricted", kRealVirtual, kVirtualMoves | MoveSet{W1, W2},
     kVirtualOnly},
    {Theory::Singular, "singular", CrossingTypeSet{CT::RealPos, CT::RealNeg, CT::Singular},
     MoveSet{R1, R2, R3, S1, S2}, {}},
    {Theory::VirtualSingular, "virtual_singular",
     CrossingTypeSet{CT::RealPos, CT::RealNeg, CT::Virtual, CT::Singular},
     kVirtualMoves | MoveSet{S1, S2, S3}, kVirtualOnly},
    {Theory::Doodle, "doodle", CrossingTypeSet{CT::Flat}, MoveSet{F1, F2}, {}},
    {Theory::VirtualDoodle, "virtual_doodle", kFlatVirtual, MoveSet{F1, F2, F4}, {}},
}};

}  // namespace

std::string_view move_name(MoveType m) {
  static constexpr std::array<std::string_view, 20> kNames{
      "R1", "R2", "R3", "V1", "V2", "V3", "V4", "F1", "F2", "F3",
      "F4", "W1", "W2", "S1", "S2", "S3", "GR1", "GR2", "GR3", "GR4"};
  return kNames[static_cast<std::size_t>(m)];
}

bool move_meaningful(MoveType m, CrossingTypeSet present) {
  if (m == MoveType::GR4) return present.size() >= 2;
  return true;
}

const TheoryFamily& theory_family(Theory t) { return kTable[static_cast<std::size_t>(t)]; }

std::span<const TheoryFamily> theory_table() { return kTable; }

std::optional<Theory> parse_theory_name(std::string_view name) {
  for (const TheoryFamily& f : kTable) {
    if (f.name == name) return f.theory;
  }
  return std::nullopt;
}

std::string_view theory_name(Theory t) { return theory_family(t).name; }

TheoryFamily with_gr_compatible(const TheoryFamily& family, CrossingTypeSet gr) {
  if (!gr.subset_of(family.allowed_crossings)) {
    throw std::invalid_argument("GR-compatible set must be contained in the crossings allowed by " +
                                std::string(family.name));
  }
  TheoryFamily out = family;
  out.gr_compatible = gr;
  return out;
}

}  // namespace genknot
