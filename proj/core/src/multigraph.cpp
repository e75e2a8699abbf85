#include "genknot/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "genknot/errors.hpp"

namespace genknot {

std::string_view label_token(EdgeLabel l) {
  if (l == EdgeLabel::Plain) return "plain";
  return crossing_token(static_cast<CrossingType>(l));
}

std::optional<EdgeLabel> parse_label_token(std::string_view token) {
  if (token == "plain") return EdgeLabel::Plain;
  if (auto t = parse_crossing_token(token)) return edge_label(*t);
  return std::nullopt;
}

std::optional<int> label_sign(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::RealPos: return 1;
    case EdgeLabel::RealNeg: return -1;
    case EdgeLabel::Virtual: return 0;
    default: return std::nullopt;
  }
}

std::size_t LabeledMultigraph::add_vertex(std::string name) {
  auto [it, inserted] = vertex_index_.try_emplace(name, names_.size());
  if (!inserted) throw std::invalid_argument("duplicate vertex " + name);
  names_.push_back(std::move(name));
  return it->second;
}

std::size_t LabeledMultigraph::ensure_vertex(std::string_view name) {
  if (auto v = find_vertex(name)) return *v;
  return add_vertex(std::string(name));
}

std::size_t LabeledMultigraph::add_edge(std::string id, std::size_t u, std::size_t v, EdgeLabel label) {
  if (u >= names_.size() || v >= names_.size()) throw std::out_of_range("edge endpoint out of range");
  auto [it, inserted] = edge_index_.try_emplace(id, edges_.size());
  if (!inserted) throw std::invalid_argument("duplicate edge " + id);
  edges_.push_back({std::move(id), u, v, label});
  return it->second;
}

std::size_t LabeledMultigraph::add_edge(std::string id, std::string_view u, std::string_view v,
                                        EdgeLabel label) {
  const std::size_t a = ensure_vertex(u);
  const std::size_t b = ensure_vertex(v);
  return add_edge(std::move(id), a, b, label);
}

std::size_t LabeledMultigraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

std::optional<std::size_t> LabeledMultigraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> LabeledMultigraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabeledMultigraph::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownIdError("vertex", std::string(name));
}

std::size_t LabeledMultigraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw UnknownIdError("edge", std::string(id));
}

std::vector<std::vector<std::size_t>> LabeledMultigraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(names_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    inc[edges_[e].u].push_back(e);
    if (!edges_[e].is_loop()) inc[edges_[e].v].push_back(e);
  }
  return inc;
}

std::size_t LabeledMultigraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

bool is_singular_edge(const LabeledMultigraph& g, std::size_t edge) {
  const Edge& e = g.edge(edge);
  if (e.is_loop()) return false;
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (f == edge) continue;
    const Edge& o = g.edge(f);
    if ((o.u == e.u && o.v == e.v) || (o.u == e.v && o.v == e.u)) return false;
  }
  return true;
}

bool is_singular_edge(const LabeledMultigraph& g, std::string_view edge_id) {
  return is_singular_edge(g, g.edge_index(edge_id));
}

LabeledMultigraph contract_star(const LabeledMultigraph& g, std::string_view vertex) {
  const std::size_t center = g.vertex_index(vertex);
  std::vector<bool> in_star(g.vertex_count(), false);
  in_star[center] = true;
  for (const Edge& e : g.edges()) {
    if (e.u == center) in_star[e.v] = true;
    if (e.v == center) in_star[e.u] = true;
  }

  LabeledMultigraph out;
  std::vector<std::size_t> image(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == center || !in_star[v]) image[v] = out.add_vertex(g.vertex_name(v));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in_star[v]) image[v] = image[center];
  }
  for (const Edge& e : g.edges()) {
    if (e.u == center || e.v == center) continue;
    out.add_edge(e.id, image[e.u], image[e.v], e.label);
  }
  return out;
}

LabeledMultigraph edge_subgraph(const LabeledMultigraph& g, std::span<const std::size_t> edges,
                                std::span<const std::size_t> extra_vertices) {
  std::vector<bool> keep(g.vertex_count(), false);
  for (std::size_t e : edges) {
    keep[g.edge(e).u] = true;
    keep[g.edge(e).v] = true;
  }
  for (std::size_t v : extra_vertices) keep[v] = true;
  LabeledMultigraph out;
  std::vector<std::size_t> image(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) image[v] = out.add_vertex(g.vertex_name(v));
  }
  for (std::size_t e : edges) {
    const Edge& ed = g.edge(e);
    out.add_edge(ed.id, image[ed.u], image[ed.v], ed.label);
  }
  return out;
}

}  // namespace genknot
