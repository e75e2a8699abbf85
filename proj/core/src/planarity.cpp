#include "genknot/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detail/arc_table.hpp"

namespace genknot {
namespace {

constexpr int kNil = -1;

// Left-right planarity test (de Fraysseix-Rosenstiehl criterion in the
// formulation of Brandes), including construction of a combinatorial
// embedding. Edges are identified by their index in the input list; each is
// oriented once during the first DFS.
class LeftRightPlanarity {
 public:
  LeftRightPlanarity(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : n_(static_cast<int>(n)), m_(static_cast<int>(edges.size())) {
    adj_.resize(n);
    for (int k = 0; k < m_; ++k) {
      end_a_.push_back(static_cast<int>(edges[static_cast<std::size_t>(k)].first));
      end_b_.push_back(static_cast<int>(edges[static_cast<std::size_t>(k)].second));
      adj_[static_cast<std::size_t>(end_a_.back())].push_back(k);
      adj_[static_cast<std::size_t>(end_b_.back())].push_back(k);
    }
    const auto mz = static_cast<std::size_t>(m_);
    const auto nz = static_cast<std::size_t>(n_);
    src_.assign(mz, kNil);
    dst_.assign(mz, kNil);
    lowpt_.assign(mz, 0);
    lowpt2_.assign(mz, 0);
    nesting_depth_.assign(mz, 0);
    ref_.assign(mz, kNil);
    side_.assign(mz, 1);
    lowpt_edge_.assign(mz, kNil);
    stack_bottom_.assign(mz, 0);
    height_.assign(nz, kNil);
    parent_edge_.assign(nz, kNil);
    out_.resize(nz);
    cw_.resize(nz);
    ccw_.resize(nz);
    first_nbr_.assign(nz, kNil);
    left_ref_.assign(nz, kNil);
    right_ref_.assign(nz, kNil);
  }

  std::optional<PlanarEmbedding> run() {
    if (n_ > 2 && m_ > 3 * n_ - 6) return std::nullopt;

    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (height_[idx(v)] == kNil) {
        height_[idx(v)] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    sort_by_nesting_depth();
    for (int r : roots) {
      if (!test(r)) return std::nullopt;
    }

    for (int k = 0; k < m_; ++k) nesting_depth_[idx(k)] *= sign(k);
    sort_by_nesting_depth();
    for (int v = 0; v < n_; ++v) {
      int previous = kNil;
      for (int k : out_[idx(v)]) {
        add_half_edge_cw(v, dst_[idx(k)], previous);
        previous = dst_[idx(k)];
      }
    }
    for (int r : roots) embed(r);

    PlanarEmbedding emb;
    emb.rotation.resize(idx(n_));
    for (int v = 0; v < n_; ++v) {
      const int start = first_nbr_[idx(v)];
      if (start == kNil) continue;
      int w = start;
      do {
        emb.rotation[idx(v)].push_back(static_cast<std::size_t>(w));
        w = cw_[idx(v)].at(w);
      } while (w != start);
    }
    return emb;
  }

 private:
  struct Interval {
    int low = kNil;
    int high = kNil;
    bool empty() const { return low == kNil && high == kNil; }
  };

  struct ConflictPair {
    Interval left;
    Interval right;
    void swap() { std::swap(left, right); }
  };

  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[idx(i.high)] > lowpt_[idx(b)];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[idx(p.right.low)];
    if (p.right.empty()) return lowpt_[idx(p.left.low)];
    return std::min(lowpt_[idx(p.left.low)], lowpt_[idx(p.right.low)]);
  }

  void sort_by_nesting_depth() {
    for (auto& list : out_) {
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return nesting_depth_[idx(a)] < nesting_depth_[idx(b)];
      });
    }
  }

  void orient(int v) {
    const int e = parent_edge_[idx(v)];
    for (int k : adj_[idx(v)]) {
      if (src_[idx(k)] != kNil) continue;
      const int w = end_a_[idx(k)] == v ? end_b_[idx(k)] : end_a_[idx(k)];
      src_[idx(k)] = v;
      dst_[idx(k)] = w;
      out_[idx(v)].push_back(k);
      lowpt_[idx(k)] = height_[idx(v)];
      lowpt2_[idx(k)] = height_[idx(v)];
      if (height_[idx(w)] == kNil) {
        parent_edge_[idx(w)] = k;
        height_[idx(w)] = height_[idx(v)] + 1;
        orient(w);
      } else {
        lowpt_[idx(k)] = height_[idx(w)];
      }
      nesting_depth_[idx(k)] = 2 * lowpt_[idx(k)];
      if (lowpt2_[idx(k)] < height_[idx(v)]) nesting_depth_[idx(k)] += 1;
      if (e != kNil) {
        if (lowpt_[idx(k)] < lowpt_[idx(e)]) {
          lowpt2_[idx(e)] = std::min(lowpt_[idx(e)], lowpt2_[idx(k)]);
          lowpt_[idx(e)] = lowpt_[idx(k)];
        } else if (lowpt_[idx(k)] > lowpt_[idx(e)]) {
          lowpt2_[idx(e)] = std::min(lowpt2_[idx(e)], lowpt_[idx(k)]);
        } else {
          lowpt2_[idx(e)] = std::min(lowpt2_[idx(e)], lowpt2_[idx(k)]);
        }
      }
    }
  }

  bool test(int v) {
    const int e = parent_edge_[idx(v)];
    const auto& children = out_[idx(v)];
    for (std::size_t i = 0; i < children.size(); ++i) {
      const int k = children[i];
      const int w = dst_[idx(k)];
      stack_bottom_[idx(k)] = stack_.size();
      if (k == parent_edge_[idx(w)]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[idx(k)] = k;
        stack_.push_back({Interval{}, Interval{k, k}});
      }
      if (lowpt_[idx(k)] < height_[idx(v)]) {
        if (i == 0) {
          lowpt_edge_[idx(e)] = lowpt_edge_[idx(k)];
        } else if (!add_constraints(k, e)) {
          return false;
        }
      }
    }
    if (e != kNil) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Merge return edges of ei into p.right.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[idx(q.right.low)] > lowpt_[idx(e)]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[idx(p.right.low)] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[idx(q.right.low)] = lowpt_edge_[idx(e)];
      }
    } while (stack_.size() != stack_bottom_[idx(ei)]);

    // Merge conflicting return edges of earlier siblings into p.left.
    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNil) ref_[idx(p.right.low)] = q.right.high;
      if (q.right.low != kNil) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[idx(p.left.low)] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[idx(e)];
    while (!stack_.empty() && lowest(stack_.back()) == height_[idx(u)]) {
      const ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNil) side_[idx(p.left.low)] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNil && dst_[idx(p.left.high)] == u) p.left.high = ref_[idx(p.left.high)];
      if (p.left.high == kNil && p.left.low != kNil) {
        ref_[idx(p.left.low)] = p.right.low;
        side_[idx(p.left.low)] = -1;
        p.left.low = kNil;
      }
      while (p.right.high != kNil && dst_[idx(p.right.high)] == u) p.right.high = ref_[idx(p.right.high)];
      if (p.right.high == kNil && p.right.low != kNil) {
        ref_[idx(p.right.low)] = p.left.low;
        side_[idx(p.right.low)] = -1;
        p.right.low = kNil;
      }
      stack_.push_back(p);
    }
    // The side of e follows its highest return edge.
    if (lowpt_[idx(e)] < height_[idx(u)] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNil && (hr == kNil || lowpt_[idx(hl)] > lowpt_[idx(hr)])) {
        ref_[idx(e)] = hl;
      } else {
        ref_[idx(e)] = hr;
      }
    }
  }

  int sign(int e) {
    if (ref_[idx(e)] != kNil) {
      side_[idx(e)] *= sign(ref_[idx(e)]);
      ref_[idx(e)] = kNil;
    }
    return side_[idx(e)];
  }

  void add_half_edge_cw(int v, int w, int ref) {
    auto& cw = cw_[idx(v)];
    auto& ccw = ccw_[idx(v)];
    if (ref == kNil) {
      cw[w] = w;
      ccw[w] = w;
      first_nbr_[idx(v)] = w;
      return;
    }
    const int after = cw.at(ref);
    cw[ref] = w;
    cw[w] = after;
    ccw[after] = w;
    ccw[w] = ref;
  }

  void add_half_edge_ccw(int v, int w, int ref) {
    if (ref == kNil) {
      add_half_edge_cw(v, w, kNil);
      return;
    }
    add_half_edge_cw(v, w, ccw_[idx(v)].at(ref));
    if (ref == first_nbr_[idx(v)]) first_nbr_[idx(v)] = w;
  }

  void add_half_edge_first(int v, int w) {
    add_half_edge_ccw(v, w, first_nbr_[idx(v)]);
  }

  void embed(int v) {
    for (int k : out_[idx(v)]) {
      const int w = dst_[idx(k)];
      if (k == parent_edge_[idx(w)]) {
        add_half_edge_first(w, v);
        left_ref_[idx(v)] = w;
        right_ref_[idx(v)] = w;
        embed(w);
      } else if (side_[idx(k)] == 1) {
        add_half_edge_cw(w, v, right_ref_[idx(w)]);
      } else {
        add_half_edge_ccw(w, v, left_ref_[idx(w)]);
        left_ref_[idx(w)] = v;
      }
    }
  }

  int n_;
  int m_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> end_a_, end_b_;
  std::vector<int> src_, dst_;
  std::vector<int> lowpt_, lowpt2_, nesting_depth_;
  std::vector<int> ref_, side_, lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<int> height_, parent_edge_;
  std::vector<std::vector<int>> out_;
  std::vector<ConflictPair> stack_;
  std::vector<std::map<int, int>> cw_, ccw_;
  std::vector<int> first_nbr_, left_ref_, right_ref_;
};

}  // namespace

SimpleGraph underlying_simple_graph(const LabeledMultigraph& g) {
  SimpleGraph s;
  s.vertex_count = g.vertex_count();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    const auto key = std::minmax(ed.u, ed.v);
    if (seen.try_emplace({key.first, key.second}, e).second) {
      s.edges.emplace_back(key.first, key.second);
      s.representative.push_back(e);
    }
  }
  return s;
}

std::optional<PlanarEmbedding> planar_embedding_simple(
    std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  // Euler: a simple planar graph on V >= 3 vertices has at most 3V - 6 edges.
  if (vertex_count >= 3 && edges.size() > 3 * vertex_count - 6) return std::nullopt;
  return LeftRightPlanarity(vertex_count, edges).run();
}

bool is_planar_simple(std::size_t vertex_count,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  return planar_embedding_simple(vertex_count, edges).has_value();
}

bool verify_embedding(std::size_t vertex_count,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      const PlanarEmbedding& embedding) {
  if (embedding.rotation.size() != vertex_count) return false;
  std::vector<std::set<std::size_t>> nbrs(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a == b || !nbrs[a].insert(b).second || !nbrs[b].insert(a).second) return false;
  }
  // position of each neighbour in the rotation of v
  std::vector<std::map<std::size_t, std::size_t>> pos(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const auto& rot = embedding.rotation[v];
    if (rot.size() != nbrs[v].size()) return false;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (!nbrs[v].contains(rot[i]) || !pos[v].emplace(rot[i], i).second) return false;
    }
  }

  detail::UnionFind uf(vertex_count);
  for (const auto& [a, b] : edges) uf.unite(a, b);
  std::map<std::size_t, long> euler;  // V - E + F per component root
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!nbrs[v].empty()) euler[uf.find(v)] += 1;
  }
  for (const auto& [a, b] : edges) euler[uf.find(a)] -= 1;

  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    for (std::size_t w : embedding.rotation[v]) {
      if (used.contains({v, w})) continue;
      euler[uf.find(v)] += 1;
      std::size_t a = v, b = w;
      while (used.insert({a, b}).second) {
        const auto& rot = embedding.rotation[b];
        const std::size_t next = rot[(pos[b].at(a) + 1) % rot.size()];
        a = b;
        b = next;
      }
    }
  }
  return std::all_of(euler.begin(), euler.end(), [](const auto& kv) { return kv.second == 2; });
}

PlanarityVerdict is_planar(const LabeledMultigraph& g) {
  const SimpleGraph s = underlying_simple_graph(g);
  PlanarityVerdict out;
  if (auto emb = planar_embedding_simple(s.vertex_count, s.edges)) {
    out.embedding = std::move(*emb);
    return out;
  }
  out.planar = false;

  // Only the shortest non-planar prefix of the edge list matters; on dense
  // graphs it is much shorter than the whole list.
  auto prefix_planar = [&](std::size_t k) {
    return is_planar_simple(s.vertex_count, {s.edges.begin(), s.edges.begin() + static_cast<std::ptrdiff_t>(k)});
  };
  std::size_t lo = 0, hi = s.edges.size();  // prefix lo is planar, prefix hi is not
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (prefix_planar(mid) ? lo : hi) = mid;
  }

  // Delete edges one at a time while the rest stays non-planar; what is left
  // is an edge-minimal non-planar subgraph. The last prefix edge is needed.
  std::vector<bool> keep(s.edges.size(), false);
  std::fill(keep.begin(), keep.begin() + static_cast<std::ptrdiff_t>(hi), true);
  for (std::size_t i = 0; i + 1 < hi; ++i) {
    keep[i] = false;
    std::vector<std::pair<std::size_t, std::size_t>> rest;
    for (std::size_t j = 0; j < hi; ++j) {
      if (keep[j]) rest.push_back(s.edges[j]);
    }
    if (is_planar_simple(s.vertex_count, rest)) keep[i] = true;
  }
  std::vector<std::size_t> degree(s.vertex_count, 0);
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    if (!keep[i]) continue;
    ++degree[s.edges[i].first];
    ++degree[s.edges[i].second];
    out.witness.edges.push_back(g.edge(s.representative[i]).id);
  }
  const auto branch4 = std::count(degree.begin(), degree.end(), 4u);
  out.witness.kind = branch4 == 5 ? KuratowskiKind::K5 : KuratowskiKind::K33;
  return out;
}

}  // namespace genknot
