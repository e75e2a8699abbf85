#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "genknot/diagram.hpp"
#include "genknot/multigraph.hpp"

namespace genknot {

// A closed curve of the fully smoothed diagram. Free loops have no arcs.
struct SeifertCircle {
  std::string id;
  std::vector<std::string> arcs;       // in traversal order
  std::vector<std::string> crossings;  // met at the head of each arc, same order

  bool is_free_loop() const { return arcs.empty(); }
};

// Vertices are circle ids, edges are crossing ids labelled by crossing type.
using SeifertGraph = LabeledMultigraph;

// Cycles of arcs under the oriented smoothing at every crossing, plus one
// circle per free loop. Ids are C1, C2, ... in the order found, starting from
// crossings in natural id order.
std::vector<SeifertCircle> seifert_circles(const Diagram& d);

std::size_t seifert_circle_count(const Diagram& d);

// Throws std::logic_error if a crossing would join a circle to itself, which
// cannot happen on a valid diagram.
SeifertGraph seifert_graph(const Diagram& d);

// Removes crossing `c`, joining its ports by the oriented smoothing. Joined
// arcs take the name of the arc entering the chain from outside `c`; a chain
// that closes up on itself becomes a free loop. Throws UnknownIdError.
Diagram smooth_at(const Diagram& d, std::string_view crossing);

// Smoothing `crossing` increases the number of connected pieces of the
// diagram (crossing-map components plus free loops).
bool is_nugatory(const Diagram& d, std::string_view crossing);

// Nugatory crossings in natural id order.
std::vector<std::string> nugatory_set(const Diagram& d);

// Circles that are cut vertices of the Seifert graph.
std::vector<std::string> separating_circles(const Diagram& d);

// Blocks of the Seifert graph, one per special factor.
std::vector<SeifertGraph> star_decompose(const Diagram& d);

bool is_special(const Diagram& d);

}  // namespace genknot
