#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genknot/multigraph.hpp"

namespace genknot {

// Rotation system of the underlying simple graph: for every vertex, its
// distinct neighbours in clockwise order.
struct PlanarEmbedding {
  std::vector<std::vector<std::size_t>> rotation;
};

enum class KuratowskiKind { K5, K33 };

// Edge-minimal non-planar subgraph: a subdivision of K5 or K3,3.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K33;
  std::vector<std::string> edges;  // one representative edge id per simple edge
};

struct PlanarityVerdict {
  bool planar = true;
  PlanarEmbedding embedding;       // when planar
  KuratowskiWitness witness;       // when not planar
};

// Exact planarity of the underlying simple graph (loops dropped, parallel
// edges merged), by the left-right criterion.
PlanarityVerdict is_planar(const LabeledMultigraph& g);

// Decision only, on a simple graph given by vertex count and edge list.
bool is_planar_simple(std::size_t vertex_count,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Left-right test returning the rotation system, or nothing when not planar.
std::optional<PlanarEmbedding> planar_embedding_simple(
    std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Certificate check: the rotation system lists every edge of the simple
// graph at both ends and traces V - E + F = 2 on each non-trivial component.
bool verify_embedding(std::size_t vertex_count,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      const PlanarEmbedding& embedding);

// Underlying simple graph of a multigraph as (u, v) pairs with u < v, together
// with one representative edge index per pair.
struct SimpleGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> representative;
};

SimpleGraph underlying_simple_graph(const LabeledMultigraph& g);

}  // namespace genknot
