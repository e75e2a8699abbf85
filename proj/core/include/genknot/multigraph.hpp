#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genknot/crossing.hpp"
#include "genknot/enum_set.hpp"

namespace genknot {

// Edge label: a crossing type, or Plain for edges that carry no crossing.
// The first five enumerators line up with CrossingType.
enum class EdgeLabel : std::uint8_t { RealPos, RealNeg, Virtual, Flat, Singular, Plain };

using LabelSet = EnumSet<EdgeLabel, 6>;

constexpr EdgeLabel edge_label(CrossingType t) { return static_cast<EdgeLabel>(t); }

// Token used by the graph format: R+ R- V F S plain.
std::string_view label_token(EdgeLabel l);
std::optional<EdgeLabel> parse_label_token(std::string_view token);

// Sign view of a label: +1, -1, 0 for RealPos, RealNeg, Virtual; nullopt for
// the labels that carry no sign.
std::optional<int> label_sign(EdgeLabel l);

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeLabel label = EdgeLabel::Plain;

  bool is_loop() const { return u == v; }
  std::size_t other(std::size_t x) const { return x == u ? v : u; }
};

// Multigraph with named vertices and named, labelled edges. Parallel edges and
// loops are allowed; vertex and edge names are unique. Vertices and edges are
// addressed by dense indices in insertion order.
class LabeledMultigraph {
 public:
  std::size_t add_vertex(std::string name);
  // Adds the vertex if it does not exist yet.
  std::size_t ensure_vertex(std::string_view name);
  std::size_t add_edge(std::string id, std::size_t u, std::size_t v, EdgeLabel label);
  std::size_t add_edge(std::string id, std::string_view u, std::string_view v, EdgeLabel label);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t loop_count() const;

  const std::string& vertex_name(std::size_t v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  // Throw UnknownIdError.
  std::size_t vertex_index(std::string_view name) const;
  std::size_t edge_index(std::string_view id) const;

  // Incident edge indices per vertex; a loop is listed once.
  std::vector<std::vector<std::size_t>> incidence() const;
  std::size_t degree(std::size_t v) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

// A non-loop edge that is the only edge between its two endpoints.
bool is_singular_edge(const LabeledMultigraph& g, std::string_view edge_id);
bool is_singular_edge(const LabeledMultigraph& g, std::size_t edge);

// G / star(v): v and all its neighbours are identified into one vertex, which
// keeps the name of v. Edges incident to v are deleted; other edges with both
// ends in the identified set survive as loops. Labels and edge ids are kept.
LabeledMultigraph contract_star(const LabeledMultigraph& g, std::string_view vertex);

// Subgraph on the given edges (by index) and the vertices they touch, plus
// `extra_vertices`. Vertex and edge names are kept.
LabeledMultigraph edge_subgraph(const LabeledMultigraph& g, std::span<const std::size_t> edges,
                                std::span<const std::size_t> extra_vertices = {});

}  // namespace genknot
