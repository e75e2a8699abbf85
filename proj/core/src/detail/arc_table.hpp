#pragma once

#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "genknot/diagram.hpp"

namespace genknot::detail {

struct PortRef {
  std::size_t crossing = 0;
  int port = 0;
};

// Where every arc of a diagram starts and ends. For a valid diagram each arc
// has exactly one tail and one head.
struct ArcTable {
  std::vector<std::string> names;  // in order of first appearance
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<PortRef>> tails;
  std::vector<std::vector<PortRef>> heads;
  std::vector<std::array<std::size_t, 4>> port_arc;  // per crossing

  bool consistent() const {
    for (std::size_t a = 0; a < names.size(); ++a) {
      if (tails[a].size() != 1 || heads[a].size() != 1) return false;
    }
    return true;
  }

  // Port at the far end of the arc attached to `from`. Needs consistent().
  PortRef far_end(const Diagram& d, PortRef from) const {
    const std::size_t a = port_arc[from.crossing][static_cast<std::size_t>(from.port)];
    const bool leaving = d.crossings[from.crossing].ports[static_cast<std::size_t>(from.port)]
                             .direction == PortDirection::Out;
    return leaving ? heads[a].front() : tails[a].front();
  }
};

inline ArcTable build_arc_table(const Diagram& d) {
  ArcTable t;
  t.port_arc.resize(d.crossings.size());
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    for (int p = 0; p < 4; ++p) {
      const Port& port = d.crossings[x].ports[static_cast<std::size_t>(p)];
      auto [it, inserted] = t.index.try_emplace(port.arc, t.names.size());
      if (inserted) {
        t.names.push_back(port.arc);
        t.tails.emplace_back();
        t.heads.emplace_back();
      }
      const std::size_t a = it->second;
      t.port_arc[x][static_cast<std::size_t>(p)] = a;
      (port.direction == PortDirection::Out ? t.tails : t.heads)[a].push_back({x, p});
    }
  }
  return t;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace genknot::detail
