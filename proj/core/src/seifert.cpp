#include "genknot/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detail/arc_table.hpp"
#include "genknot/errors.hpp"
#include "genknot/graph_algorithms.hpp"

namespace genknot {
namespace {

std::vector<std::size_t> natural_order(const Diagram& d) {
  std::vector<std::size_t> order(d.crossings.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return natural_less(d.crossings[a].id, d.crossings[b].id);
  });
  return order;
}

// Circle index per arc, plus the traced circles.
struct Tracing {
  std::vector<SeifertCircle> circles;
  std::vector<std::size_t> circle_of_arc;
};

Tracing trace(const Diagram& d) {
  require_valid(d);
  const detail::ArcTable table = detail::build_arc_table(d);
  Tracing t;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  t.circle_of_arc.assign(table.names.size(), kUnset);
  for (std::size_t x : natural_order(d)) {
    for (int p = 0; p < 4; ++p) {
      if (d.crossings[x].ports[static_cast<std::size_t>(p)].direction != PortDirection::Out) continue;
      std::size_t a = table.port_arc[x][static_cast<std::size_t>(p)];
      if (t.circle_of_arc[a] != kUnset) continue;
      SeifertCircle circle;
      circle.id = "C" + std::to_string(t.circles.size() + 1);
      while (t.circle_of_arc[a] == kUnset) {
        t.circle_of_arc[a] = t.circles.size();
        const detail::PortRef head = table.heads[a].front();
        const Crossing& c = d.crossings[head.crossing];
        circle.arcs.push_back(table.names[a]);
        circle.crossings.push_back(c.id);
        a = table.port_arc[head.crossing][static_cast<std::size_t>(seifert_partner(c, head.port))];
      }
      t.circles.push_back(std::move(circle));
    }
  }
  for (std::size_t k = 0; k < d.free_loops; ++k) {
    t.circles.push_back({"C" + std::to_string(t.circles.size() + 1), {}, {}});
  }
  return t;
}

}  // namespace

std::vector<SeifertCircle> seifert_circles(const Diagram& d) { return trace(d).circles; }

std::size_t seifert_circle_count(const Diagram& d) { return trace(d).circles.size(); }

SeifertGraph seifert_graph(const Diagram& d) {
  const Tracing t = trace(d);
  const detail::ArcTable table = detail::build_arc_table(d);
  SeifertGraph g;
  for (const SeifertCircle& c : t.circles) g.add_vertex(c.id);
  for (std::size_t x : natural_order(d)) {
    const Crossing& c = d.crossings[x];
    const int r = in_pair_offset(c).value();
    const std::size_t first = t.circle_of_arc[table.port_arc[x][static_cast<std::size_t>(r)]];
    const std::size_t second = t.circle_of_arc[table.port_arc[x][static_cast<std::size_t>((r + 1) % 4)]];
    if (first == second) throw std::logic_error("crossing " + c.id + " joins a Seifert circle to itself");
    g.add_edge(c.id, first, second, edge_label(c.type));
  }
  return g;
}

Diagram smooth_at(const Diagram& d, std::string_view crossing) {
  require_valid(d);
  const auto it = std::find_if(d.crossings.begin(), d.crossings.end(),
                               [&](const Crossing& c) { return c.id == crossing; });
  if (it == d.crossings.end()) throw UnknownIdError("crossing", std::string(crossing));
  const std::size_t cx = static_cast<std::size_t>(it - d.crossings.begin());
  const detail::ArcTable table = detail::build_arc_table(d);

  // Arcs joined through c form chains; each chain becomes one arc.
  detail::UnionFind uf(table.names.size());
  const int r = in_pair_offset(*it).value();
  for (int in : {r, (r + 1) % 4}) {
    uf.unite(table.port_arc[cx][static_cast<std::size_t>(in)],
             table.port_arc[cx][static_cast<std::size_t>(seifert_partner(*it, in))]);
  }
  std::vector<std::string> chain_name(table.names.size());
  for (std::size_t a = 0; a < table.names.size(); ++a) {
    if (table.tails[a].front().crossing != cx) chain_name[uf.find(a)] = table.names[a];
  }

  Diagram out;
  out.theory = d.theory;
  out.free_loops = d.free_loops;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (x == cx) continue;
    Crossing c = d.crossings[x];
    for (std::size_t p = 0; p < 4; ++p) c.ports[p].arc = chain_name[uf.find(table.port_arc[x][p])];
    out.crossings.push_back(std::move(c));
  }
  std::vector<bool> counted(table.names.size(), false);
  for (int p = 0; p < 4; ++p) {
    const std::size_t root = uf.find(table.port_arc[cx][static_cast<std::size_t>(p)]);
    if (chain_name[root].empty() && !counted[root]) {
      counted[root] = true;
      ++out.free_loops;
    }
  }
  return out;
}

bool is_nugatory(const Diagram& d, std::string_view crossing) {
  return diagram_components(smooth_at(d, crossing)) > diagram_components(d);
}

std::vector<std::string> nugatory_set(const Diagram& d) {
  std::vector<std::string> out;
  for (std::size_t x : natural_order(d)) {
    if (is_nugatory(d, d.crossings[x].id)) out.push_back(d.crossings[x].id);
  }
  return out;
}

std::vector<std::string> separating_circles(const Diagram& d) {
  std::vector<std::string> cuts = blocks(seifert_graph(d)).cut_vertices;
  std::sort(cuts.begin(), cuts.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  return cuts;
}

std::vector<SeifertGraph> star_decompose(const Diagram& d) { return blocks(seifert_graph(d)).blocks; }

bool is_special(const Diagram& d) {
  const BlockDecomposition b = blocks(seifert_graph(d));
  return b.blocks.size() == 1 && b.cut_vertices.empty();
}

}  // namespace genknot
