#include "genknot/graph_algorithms.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace genknot {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Hopcroft-Tarjan lowpoint DFS shared by the block and bridge searches.
// Parent edges are skipped by index so that parallel edges form cycles.
class LowpointSearch {
 public:
  explicit LowpointSearch(const LabeledMultigraph& g)
      : g_(g), inc_(g.incidence()), disc_(g.vertex_count(), kNone), low_(g.vertex_count(), 0) {}

  void run() {
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (disc_[v] == kNone) visit(v, kNone);
    }
  }

  std::vector<std::vector<std::size_t>> block_edges;
  std::vector<std::size_t> bridges;

 private:
  void visit(std::size_t v, std::size_t parent_edge) {
    disc_[v] = low_[v] = counter_++;
    for (std::size_t e : inc_[v]) {
      const Edge& ed = g_.edge(e);
      if (ed.is_loop() || e == parent_edge) continue;
      const std::size_t w = ed.other(v);
      if (disc_[w] == kNone) {
        stack_.push_back(e);
        visit(w, e);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] > disc_[v]) bridges.push_back(e);
        if (low_[w] >= disc_[v]) {
          std::vector<std::size_t> block;
          while (true) {
            const std::size_t top = stack_.back();
            stack_.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          block_edges.push_back(std::move(block));
        }
      } else if (disc_[w] < disc_[v]) {
        stack_.push_back(e);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const LabeledMultigraph& g_;
  std::vector<std::vector<std::size_t>> inc_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> low_;
  std::vector<std::size_t> stack_;
  std::size_t counter_ = 0;
};

}  // namespace

BipartiteVerdict is_bipartite(const LabeledMultigraph& g) {
  BipartiteVerdict out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      out.bipartite = false;
      out.odd_cycle = {e.id};
      return out;
    }
  }
  const auto inc = g.incidence();
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<std::size_t> parent_edge(g.vertex_count(), kNone);
  std::vector<std::size_t> depth(g.vertex_count(), 0);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t e : inc[v]) {
        const std::size_t w = g.edge(e).other(v);
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          parent_edge[w] = e;
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (colour[w] == colour[v]) {
          // Walk both ends up the BFS tree to their common ancestor.
          std::vector<std::string> left, right;
          std::size_t a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              left.push_back(g.edge(parent_edge[a]).id);
              a = g.edge(parent_edge[a]).other(a);
            } else {
              right.push_back(g.edge(parent_edge[b]).id);
              b = g.edge(parent_edge[b]).other(b);
            }
          }
          out.bipartite = false;
          out.odd_cycle.assign(left.rbegin(), left.rend());
          out.odd_cycle.push_back(g.edge(e).id);
          out.odd_cycle.insert(out.odd_cycle.end(), right.begin(), right.end());
          return out;
        }
      }
    }
  }
  out.side = std::move(colour);
  return out;
}

BlockDecomposition blocks(const LabeledMultigraph& g) {
  LowpointSearch search(g);
  search.run();

  std::vector<std::vector<std::size_t>> edge_sets = search.block_edges;
  for (auto& b : edge_sets) std::sort(b.begin(), b.end());
  std::sort(edge_sets.begin(), edge_sets.end());

  BlockDecomposition out;
  std::vector<std::size_t> blocks_per_vertex(g.vertex_count(), 0);
  for (auto& edges : edge_sets) {
    std::set<std::size_t> verts;
    for (std::size_t e : edges) {
      verts.insert(g.edge(e).u);
      verts.insert(g.edge(e).v);
    }
    for (std::size_t v : verts) ++blocks_per_vertex[v];
    out.blocks.push_back(edge_subgraph(g, edges));
    out.block_vertices.emplace_back(verts.begin(), verts.end());
    out.block_edges.push_back(std::move(edges));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (blocks_per_vertex[v] == 0) {
      const std::size_t single[] = {v};
      out.blocks.push_back(edge_subgraph(g, {}, single));
      out.block_edges.emplace_back();
      out.block_vertices.push_back({v});
    } else if (blocks_per_vertex[v] >= 2) {
      out.cut_vertices.push_back(g.vertex_name(v));
    }
  }
  return out;
}

std::vector<std::string> cut_edges(const LabeledMultigraph& g) {
  LowpointSearch search(g);
  search.run();
  std::vector<std::size_t> idx = search.bridges;
  std::sort(idx.begin(), idx.end());
  std::vector<std::string> out;
  for (std::size_t e : idx) out.push_back(g.edge(e).id);
  return out;
}

std::vector<std::size_t> component_labels(const LabeledMultigraph& g) {
  const auto inc = g.incidence();
  std::vector<std::size_t> label(g.vertex_count(), kNone);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != kNone) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : inc[v]) {
        const std::size_t w = g.edge(e).other(v);
        if (label[w] == kNone) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t connected_component_count(const LabeledMultigraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const LabeledMultigraph& g) { return connected_component_count(g) <= 1; }

std::vector<LabeledMultigraph> split_components(const LabeledMultigraph& g) {
  const auto labels = component_labels(g);
  const std::size_t k = connected_component_count(g);
  std::vector<std::vector<std::size_t>> edges(k), verts(k);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) verts[labels[v]].push_back(v);
  for (std::size_t e = 0; e < g.edge_count(); ++e) edges[labels[g.edge(e).u]].push_back(e);
  std::vector<LabeledMultigraph> out;
  for (std::size_t c = 0; c < k; ++c) out.push_back(edge_subgraph(g, edges[c], verts[c]));
  return out;
}

}  // namespace genknot
