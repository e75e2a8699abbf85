#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "genknot/multigraph.hpp"

namespace genknot {

struct BipartiteVerdict {
  bool bipartite = true;
  // Colour 0/1 per vertex, filled when bipartite.
  std::vector<int> side;
  // Edge ids of an odd cycle, in cycle order, when not bipartite. A loop is an
  // odd cycle of length 1.
  std::vector<std::string> odd_cycle;
};

BipartiteVerdict is_bipartite(const LabeledMultigraph& g);

// Maximal non-separable connected subgraphs. Every non-loop edge lies in
// exactly one block; a vertex with no non-loop edge forms a trivial block.
// Loops are not assigned to blocks.
struct BlockDecomposition {
  std::vector<LabeledMultigraph> blocks;
  std::vector<std::vector<std::size_t>> block_edges;     // edge indices into the input
  std::vector<std::vector<std::size_t>> block_vertices;  // vertex indices into the input
  std::vector<std::string> cut_vertices;
};

BlockDecomposition blocks(const LabeledMultigraph& g);

// Edges whose removal increases the number of connected components. Parallel
// edges and loops are never bridges.
std::vector<std::string> cut_edges(const LabeledMultigraph& g);

// Component id per vertex, numbered in order of the first vertex seen.
std::vector<std::size_t> component_labels(const LabeledMultigraph& g);
std::size_t connected_component_count(const LabeledMultigraph& g);
// The empty graph counts as connected.
bool is_connected(const LabeledMultigraph& g);

// The same graph restricted to each connected component, in component order.
std::vector<LabeledMultigraph> split_components(const LabeledMultigraph& g);

}  // namespace genknot
