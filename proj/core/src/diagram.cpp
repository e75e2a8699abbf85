#include "genknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "detail/arc_table.hpp"
#include "genknot/errors.hpp"

namespace genknot {
namespace {

bool is_alnum_token(std::string_view s, bool allow_underscore) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [&](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || (allow_underscore && ch == '_');
  });
}

std::string describe_report(const ValidationReport& r) {
  std::string out = "invalid diagram";
  for (const Violation& v : r.violations) out += "; " + v.message;
  return out;
}

// Components of the crossing map, labelled by the smallest crossing index.
std::vector<std::size_t> crossing_components(const Diagram& d, const detail::ArcTable& t) {
  detail::UnionFind uf(d.crossings.size());
  for (std::size_t a = 0; a < t.names.size(); ++a) {
    for (const auto& tail : t.tails[a]) {
      for (const auto& head : t.heads[a]) uf.unite(tail.crossing, head.crossing);
    }
  }
  std::vector<std::size_t> comp(d.crossings.size());
  for (std::size_t x = 0; x < d.crossings.size(); ++x) comp[x] = uf.find(x);
  return comp;
}

}  // namespace

const Crossing* Diagram::find_crossing(std::string_view id) const {
  for (const Crossing& c : crossings) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

InvalidDiagram::InvalidDiagram(ValidationReport report)
    : std::invalid_argument(describe_report(report)), report_(std::move(report)) {}

std::optional<int> in_pair_offset(const Crossing& c) {
  for (int r = 0; r < 4; ++r) {
    auto dir = [&](int k) { return c.ports[static_cast<std::size_t>((r + k) % 4)].direction; };
    if (dir(0) == PortDirection::In && dir(1) == PortDirection::In &&
        dir(2) == PortDirection::Out && dir(3) == PortDirection::Out) {
      return r;
    }
  }
  return std::nullopt;
}

int seifert_partner(const Crossing& c, int in_port) {
  const int r = in_pair_offset(c).value();
  if (in_port == r) return (r + 3) % 4;
  if (in_port == (r + 1) % 4) return (r + 2) % 4;
  throw std::invalid_argument("port is not an In port of crossing " + c.id);
}

ValidationReport validate(const Diagram& d) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string crossing, std::string arc, std::string message) {
    report.violations.push_back({kind, std::move(crossing), std::move(arc), std::move(message)});
  };

  std::unordered_set<std::string> seen;
  for (const Crossing& c : d.crossings) {
    if (!is_alnum_token(c.id, true)) add(ViolationKind::BadIdentifier, c.id, "", "bad crossing id '" + c.id + "'");
    for (const Port& p : c.ports) {
      if (!is_alnum_token(p.arc, false)) {
        add(ViolationKind::BadIdentifier, c.id, p.arc, "crossing " + c.id + " has bad arc name '" + p.arc + "'");
      }
    }
    if (!seen.insert(c.id).second) add(ViolationKind::DuplicateCrossingId, c.id, "", "duplicate crossing id " + c.id);
    if (!in_pair_offset(c)) add(ViolationKind::BadPortPattern, c.id, "", "bad port pattern " + c.id);
  }

  const detail::ArcTable table = detail::build_arc_table(d);
  for (std::size_t a = 0; a < table.names.size(); ++a) {
    const std::string& name = table.names[a];
    if (table.tails[a].size() > 1) {
      add(ViolationKind::ArcTwoTails, d.crossings[table.tails[a][1].crossing].id, name, "arc " + name + " has two tails");
    }
    if (table.heads[a].size() > 1) {
      add(ViolationKind::ArcTwoHeads, d.crossings[table.heads[a][1].crossing].id, name, "arc " + name + " has two heads");
    }
    if (table.tails[a].empty()) {
      add(ViolationKind::ArcNoTail, d.crossings[table.heads[a][0].crossing].id, name, "arc " + name + " has no tail");
    }
    if (table.heads[a].empty()) {
      add(ViolationKind::ArcNoHead, d.crossings[table.tails[a][0].crossing].id, name, "arc " + name + " has no head");
    }
  }

  if (d.theory) {
    const TheoryFamily& family = theory_family(*d.theory);
    for (const Crossing& c : d.crossings) {
      if (!family.allowed_crossings.contains(c.type)) {
        add(ViolationKind::TheoryMismatch, c.id, "",
            "crossing " + c.id + " has type " + std::string(crossing_token(c.type)) +
                " not allowed in theory " + std::string(family.name));
      }
    }
  }

  if (!table.consistent()) return report;

  // Face tracing: leave along a port, arrive at the far port, continue with
  // the counterclockwise successor of the arrival port.
  const std::vector<std::size_t> comp = crossing_components(d, table);
  std::map<std::size_t, ComponentEuler> euler;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    euler[comp[x]].vertices += 1;
    euler[comp[x]].edges += 2;
  }
  std::vector<bool> used(d.crossings.size() * 4, false);
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    for (int p = 0; p < 4; ++p) {
      if (used[x * 4 + static_cast<std::size_t>(p)]) continue;
      euler[comp[x]].faces += 1;
      detail::PortRef cur{x, p};
      while (!used[cur.crossing * 4 + static_cast<std::size_t>(cur.port)]) {
        used[cur.crossing * 4 + static_cast<std::size_t>(cur.port)] = true;
        const detail::PortRef arrive = table.far_end(d, cur);
        cur = {arrive.crossing, (arrive.port + 1) % 4};
      }
    }
  }
  for (const auto& [root, e] : euler) {
    report.components.push_back(e);
    if (e.genus() != 0) {
      std::ostringstream msg;
      msg << "component of crossing " << d.crossings[root].id << " is not planar (V=" << e.vertices
          << " E=" << e.edges << " F=" << e.faces << ", genus " << e.genus() << ")";
      add(ViolationKind::NonPlanar, d.crossings[root].id, "", msg.str());
    }
  }
  return report;
}

void require_valid(const Diagram& d) {
  ValidationReport r = validate(d);
  if (!r.valid()) throw InvalidDiagram(std::move(r));
}

std::vector<std::vector<std::string>> curve_arcs(const Diagram& d) {
  require_valid(d);
  const detail::ArcTable table = detail::build_arc_table(d);
  std::vector<bool> seen(table.names.size(), false);
  std::vector<std::vector<std::string>> curves;
  for (std::size_t start = 0; start < table.names.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::string> curve;
    std::size_t a = start;
    while (!seen[a]) {
      seen[a] = true;
      curve.push_back(table.names[a]);
      const detail::PortRef head = table.heads[a].front();
      a = table.port_arc[head.crossing][static_cast<std::size_t>(through_partner(head.port))];
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::size_t curve_components(const Diagram& d) { return curve_arcs(d).size() + d.free_loops; }

std::size_t diagram_components(const Diagram& d) {
  require_valid(d);
  const detail::ArcTable table = detail::build_arc_table(d);
  const std::vector<std::size_t> comp = crossing_components(d, table);
  const std::set<std::size_t> roots(comp.begin(), comp.end());
  return roots.size() + d.free_loops;
}

Diagram classicalize(const Diagram& d) {
  Diagram out = d;
  for (Crossing& c : out.crossings) {
    if (!is_real(c.type)) c.type = CrossingType::RealPos;
  }
  return out;
}

bool theory_check(const Diagram& d, const TheoryFamily& theory) {
  return crossing_types_present(d).subset_of(theory.allowed_crossings);
}

CrossingTypeSet crossing_types_present(const Diagram& d) {
  CrossingTypeSet s;
  for (const Crossing& c : d.crossings) s.insert(c.type);
  return s;
}

Diagram reverse_curve(const Diagram& d, std::string_view arc) {
  const auto curves = curve_arcs(d);
  const auto it = std::find_if(curves.begin(), curves.end(), [&](const auto& curve) {
    return std::find(curve.begin(), curve.end(), arc) != curve.end();
  });
  if (it == curves.end()) throw UnknownIdError("arc", std::string(arc));
  const std::unordered_set<std::string> flip(it->begin(), it->end());
  Diagram out = d;
  for (Crossing& c : out.crossings) {
    for (Port& p : c.ports) {
      if (flip.contains(p.arc)) {
        p.direction = p.direction == PortDirection::In ? PortDirection::Out : PortDirection::In;
      }
    }
  }
  return out;
}

bool natural_less(std::string_view a, std::string_view b) {
  auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace genknot
