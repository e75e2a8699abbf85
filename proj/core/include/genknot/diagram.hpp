#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genknot/crossing.hpp"
#include "genknot/theory.hpp"

namespace genknot {

enum class PortDirection : std::uint8_t { In, Out };

// One of the four half-strands meeting at a crossing. An Out port is the tail
// of its arc, an In port is the head.
struct Port {
  std::string arc;
  PortDirection direction = PortDirection::In;

  friend bool operator==(const Port&, const Port&) = default;
};

// A transverse oriented double point. Ports are listed counterclockwise and
// their directions read as a rotation of [In, In, Out, Out]; the strand that
// enters at port k leaves at port k+2.
struct Crossing {
  std::string id;
  CrossingType type = CrossingType::RealPos;
  std::array<Port, 4> ports;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A generalized link diagram as an oriented planar combinatorial map.
//
// Crossings are 4-valent vertices with a counterclockwise rotation; arcs are
// directed edges named by their string ids. Closed components without any
// crossing are kept as a count of free loops.
struct Diagram {
  std::vector<Crossing> crossings;
  std::size_t free_loops = 0;
  std::optional<Theory> theory;

  std::size_t crossing_count() const { return crossings.size(); }
  const Crossing* find_crossing(std::string_view id) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

enum class ViolationKind : std::uint8_t {
  BadIdentifier,
  DuplicateCrossingId,
  BadPortPattern,
  ArcTwoTails,
  ArcTwoHeads,
  ArcNoTail,
  ArcNoHead,
  NonPlanar,
  TheoryMismatch,
};

struct Violation {
  ViolationKind kind;
  std::string crossing;  // empty when not tied to a crossing
  std::string arc;       // empty when not tied to an arc
  std::string message;
};

// Euler data of one connected component of the crossing map.
struct ComponentEuler {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;

  int euler_characteristic() const {
    return static_cast<int>(vertices) - static_cast<int>(edges) + static_cast<int>(faces);
  }
  int genus() const { return (2 - euler_characteristic()) / 2; }
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Filled only when the arc pairing is consistent; ordered by the first
  // crossing of each component.
  std::vector<ComponentEuler> components;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const Diagram& d);

class InvalidDiagram : public std::invalid_argument {
 public:
  explicit InvalidDiagram(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Throws InvalidDiagram carrying the full report.
void require_valid(const Diagram& d);

// Closed curves under through-pairing (In port k continues at port k+2),
// plus free loops.
std::size_t curve_components(const Diagram& d);

// Arcs of each closed curve in traversal order. Free loops are not listed.
std::vector<std::vector<std::string>> curve_arcs(const Diagram& d);

// Connected components of the diagram as a subset of the plane: components of
// the crossing map plus free loops.
std::size_t diagram_components(const Diagram& d);

// Every non-real crossing becomes RealPos; everything else is kept.
Diagram classicalize(const Diagram& d);

bool theory_check(const Diagram& d, const TheoryFamily& theory);

CrossingTypeSet crossing_types_present(const Diagram& d);

// Reverses the orientation of the closed curve that contains `arc`. The
// result is valid whenever `d` is.
Diagram reverse_curve(const Diagram& d, std::string_view arc);

// Ordering used for crossing ids in canonical output: runs of digits compare
// numerically, so c2 < c10.
bool natural_less(std::string_view a, std::string_view b);

// Offset r such that ports r, r+1 (mod 4) are In and r+2, r+3 are Out, or
// nullopt when the direction pattern is not a rotation of [In, In, Out, Out].
std::optional<int> in_pair_offset(const Crossing& c);

// Out port joined to the In port `in_port` by the oriented smoothing: each
// incoming strand turns into the cyclically adjacent outgoing one.
int seifert_partner(const Crossing& c, int in_port);

constexpr int through_partner(int port) { return (port + 2) % 4; }

}  // namespace genknot
