#include "genknot/index.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <unordered_map>

#include "genknot/errors.hpp"
#include "genknot/graph_algorithms.hpp"

namespace genknot {
namespace {

// Search state edge. Parallel classes are collapsed into one entry marked
// `multi`: such edges can never become singular again, so only their end
// points matter. Loops are dropped; they are never singular and contraction
// treats them as neither adjacent to nor neighbours of anything.
struct StateEdge {
  std::uint16_t u = 0;
  std::uint16_t v = 0;
  std::uint32_t edge = 0;  // index into the input graph (representative for multi)
  bool multi = false;
  bool selectable = false;
};

using State = std::vector<StateEdge>;

void normalize(State& s) {
  std::erase_if(s, [](const StateEdge& e) { return e.u == e.v; });
  for (StateEdge& e : s) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(s.begin(), s.end(), [](const StateEdge& a, const StateEdge& b) {
    return std::tie(a.u, a.v, a.edge) < std::tie(b.u, b.v, b.edge);
  });
  State out;
  for (const StateEdge& e : s) {
    if (!out.empty() && out.back().u == e.u && out.back().v == e.v) {
      out.back().multi = true;
      out.back().selectable = false;
    } else {
      out.push_back(e);
    }
  }
  for (StateEdge& e : out) {
    if (e.multi) e.selectable = false;
  }
  s = std::move(out);
}

State contract(const State& s, std::uint16_t centre) {
  std::vector<std::uint16_t> star{centre};
  for (const StateEdge& e : s) {
    if (e.u == centre) star.push_back(e.v);
    if (e.v == centre) star.push_back(e.u);
  }
  auto in_star = [&](std::uint16_t x) { return std::find(star.begin(), star.end(), x) != star.end(); };
  State out;
  out.reserve(s.size());
  for (StateEdge e : s) {
    if (e.u == centre || e.v == centre) continue;
    if (in_star(e.u)) e.u = centre;
    if (in_star(e.v)) e.v = centre;
    out.push_back(e);
  }
  normalize(out);
  return out;
}

std::string encode(const State& s) {
  std::string key;
  key.reserve(s.size() * 5);
  for (const StateEdge& e : s) {
    key.push_back(static_cast<char>(e.u & 0xff));
    key.push_back(static_cast<char>(e.u >> 8));
    key.push_back(static_cast<char>(e.v & 0xff));
    key.push_back(static_cast<char>(e.v >> 8));
    key.push_back(static_cast<char>(e.multi ? 0 : (e.selectable ? 1 : 2)));
  }
  return key;
}

State initial_state(const LabeledMultigraph& g, const TypeFilter& filter) {
  if (g.vertex_count() > 0xffff) throw std::length_error("graph too large for exact index search");
  State s;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    s.push_back({static_cast<std::uint16_t>(e.u), static_cast<std::uint16_t>(e.v),
                 static_cast<std::uint32_t>(i), false, filter.allows(e.label)});
  }
  normalize(s);
  return s;
}

// Taking edge `pick` with star centre `centre`: every edge sharing an end
// point with `pick` stops being eligible, then star(centre) is contracted.
State take(const State& s, std::size_t pick, std::uint16_t centre) {
  const std::uint16_t a = s[pick].u, b = s[pick].v;
  State blocked = s;
  for (StateEdge& e : blocked) {
    if (e.u == a || e.u == b || e.v == a || e.v == b) e.selectable = false;
  }
  return contract(blocked, centre);
}

// Connected pieces of a state that still hold a selectable edge. Moves in one
// piece never touch another, so the index is the sum over pieces; pieces
// without a selectable edge contribute nothing.
std::vector<State> live_pieces(const State& s) {
  std::unordered_map<std::uint16_t, std::uint16_t> parent;
  auto find = [&](std::uint16_t x) {
    parent.try_emplace(x, x);
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const StateEdge& e : s) parent[find(e.u)] = find(e.v);
  std::unordered_map<std::uint16_t, std::size_t> slot;
  std::vector<State> pieces;
  for (const StateEdge& e : s) {
    auto [it, fresh] = slot.try_emplace(find(e.u), pieces.size());
    if (fresh) pieces.emplace_back();
    pieces[it->second].push_back(e);
  }
  std::erase_if(pieces, [](const State& p) {
    return std::none_of(p.begin(), p.end(), [](const StateEdge& e) { return e.selectable; });
  });
  return pieces;
}

// Memo key independent of which vertex ids a piece happens to use: vertices
// are renumbered in order of first appearance.
std::string relabelled_key(State s) {
  std::unordered_map<std::uint16_t, std::uint16_t> id;
  auto rename = [&](std::uint16_t x) {
    return id.try_emplace(x, static_cast<std::uint16_t>(id.size())).first->second;
  };
  for (StateEdge& e : s) {
    e.u = rename(e.u);
    e.v = rename(e.v);
  }
  normalize(s);
  return encode(s);
}

class IndexSearch {
 public:
  std::size_t solve(const State& s) {
    std::vector<State> pieces = live_pieces(s);
    std::size_t total = 0;
    for (const State& p : pieces) total += solve_piece(p);
    return total;
  }

  IndCertificate witness(State s, const LabeledMultigraph& g) {
    IndCertificate cert;
    std::size_t remaining = solve(s);
    while (remaining > 0) {
      bool advanced = false;
      for (std::size_t i = 0; i < s.size() && !advanced; ++i) {
        if (!s[i].selectable) continue;
        for (std::uint16_t centre : {s[i].u, s[i].v}) {
          State next = take(s, i, centre);
          if (solve(next) + 1 == remaining) {
            cert.push_back({g.edge(s[i].edge).id, g.vertex_name(centre)});
            s = std::move(next);
            --remaining;
            advanced = true;
            break;
          }
        }
      }
      if (!advanced) throw std::logic_error("index search memo is inconsistent");
    }
    return cert;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  std::size_t solve_piece(const State& s) {
    std::string key = relabelled_key(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t best = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].selectable) continue;
      for (std::uint16_t centre : {s[i].u, s[i].v}) {
        best = std::max(best, 1 + solve(take(s, i, centre)));
      }
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

  std::unordered_map<std::string, std::size_t> memo_;
};

// Top-down evaluation of the recursive definition for a fixed edge set.
class IndependenceCheck {
 public:
  IndependenceCheck(const LabeledMultigraph& g, const TypeFilter& filter) : g_(g), filter_(filter) {}

  bool check(const State& s, const std::vector<std::uint32_t>& set, IndCertificate* cert) {
    if (set.empty()) return true;
    std::vector<std::size_t> pos;
    for (std::uint32_t id : set) {
      auto it = std::find_if(s.begin(), s.end(), [&](const StateEdge& e) { return e.edge == id && !e.multi; });
      if (it == s.end() || !filter_.allows(g_.edge(id).label)) return false;
      pos.push_back(static_cast<std::size_t>(it - s.begin()));
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        const StateEdge &a = s[pos[i]], &b = s[pos[j]];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
      }
    }

    std::string key = encode(s);
    key.push_back('|');
    for (std::size_t p : pos) {
      key.push_back(static_cast<char>(s[p].u & 0xff));
      key.push_back(static_cast<char>(s[p].u >> 8));
      key.push_back(static_cast<char>(s[p].v & 0xff));
      key.push_back(static_cast<char>(s[p].v >> 8));
    }
    if (!cert) {
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    bool result = false;
    for (std::size_t i = 0; i < set.size() && !result; ++i) {
      std::vector<std::uint32_t> rest = set;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      for (std::uint16_t centre : {s[pos[i]].u, s[pos[i]].v}) {
        if (check(contract(s, centre), rest, nullptr)) {
          result = true;
          if (cert) {
            cert->push_back({g_.edge(set[i]).id, g_.vertex_name(centre)});
            check(contract(s, centre), rest, cert);
          }
          break;
        }
      }
    }
    memo_[key] = result;
    return result;
  }

 private:
  const LabeledMultigraph& g_;
  const TypeFilter& filter_;
  std::unordered_map<std::string, bool> memo_;
};

bool adjacent(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

}  // namespace

TypeFilter TypeFilter::of(CrossingTypeSet types) {
  LabelSet s;
  for (CrossingType t : types.items()) s.insert(edge_label(t));
  return TypeFilter(s);
}

std::optional<TypeFilter> TypeFilter::named(std::string_view name) {
  using L = EdgeLabel;
  if (name == "all") return all();
  if (name == "none") return none();
  if (name == "0") return TypeFilter(LabelSet{L::Virtual});
  if (name == "+") return TypeFilter(LabelSet{L::RealPos});
  if (name == "-") return TypeFilter(LabelSet{L::RealNeg});
  if (name == "0-") return TypeFilter(LabelSet{L::Virtual, L::RealNeg});
  if (name == "+-") return TypeFilter(LabelSet{L::RealPos, L::RealNeg});
  return std::nullopt;
}

TypeFilter TypeFilter::parse(std::string_view text) {
  if (auto f = named(text)) return *f;
  LabelSet s;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    auto label = parse_label_token(token);
    if (!label) throw std::invalid_argument("bad filter token '" + std::string(token) + "'");
    s.insert(*label);
    start = comma + 1;
  }
  return TypeFilter(s);
}

CrossingTypeSet TypeFilter::crossing_types() const {
  CrossingTypeSet s;
  for (CrossingType t : kCrossingTypes) {
    if (allows(edge_label(t))) s.insert(t);
  }
  return s;
}

std::string TypeFilter::name() const {
  for (std::string_view n : {"all", "none", "0", "+", "-", "0-", "+-"}) {
    if (*named(n) == *this) return std::string(n);
  }
  std::string out;
  for (EdgeLabel l : labels_.items()) {
    if (!out.empty()) out += ',';
    out += label_token(l);
  }
  return out;
}

IndResult ind(const LabeledMultigraph& g, const TypeFilter& filter) {
  IndexSearch search;
  const State start = initial_state(g, filter);
  IndResult r;
  r.value = search.solve(start);
  r.certificate = search.witness(start, g);
  r.states = search.states();
  return r;
}

IndependenceVerdict is_independent(const LabeledMultigraph& g, std::span<const std::string> edges,
                                   const TypeFilter& filter) {
  std::vector<std::uint32_t> set;
  for (const std::string& id : edges) set.push_back(static_cast<std::uint32_t>(g.edge_index(id)));
  std::sort(set.begin(), set.end());
  IndependenceVerdict out;
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) return out;
  IndependenceCheck check(g, filter);
  out.independent = check.check(initial_state(g, TypeFilter::all()), set, &out.certificate);
  if (!out.independent) out.certificate.clear();
  return out;
}

CertificateCheck verify_certificate(const LabeledMultigraph& g, const IndCertificate& certificate,
                                    const TypeFilter& filter) {
  LabeledMultigraph cur = g;
  auto fail = [](std::size_t step, std::string reason) {
    return CertificateCheck{false, step, std::move(reason)};
  };
  for (std::size_t j = 0; j < certificate.size(); ++j) {
    const IndStep& step = certificate[j];
    const auto e = cur.find_edge(step.edge);
    if (!e) return fail(j + 1, "edge " + step.edge + " is not in the graph");
    const Edge& ed = cur.edge(*e);
    if (!filter.allows(ed.label)) return fail(j + 1, "edge " + step.edge + " is not allowed by the filter");
    if (!is_singular_edge(cur, *e)) return fail(j + 1, "edge " + step.edge + " is not singular");
    const auto v = cur.find_vertex(step.vertex);
    if (!v || (*v != ed.u && *v != ed.v)) {
      return fail(j + 1, "vertex " + step.vertex + " is not an end point of " + step.edge);
    }
    for (std::size_t l = j + 1; l < certificate.size(); ++l) {
      if (auto later = cur.find_edge(certificate[l].edge); later && adjacent(ed, cur.edge(*later))) {
        return fail(j + 1, "edge " + step.edge + " is adjacent to " + certificate[l].edge);
      }
    }
    cur = contract_star(cur, step.vertex);
  }
  return {};
}

NotBipartiteError::NotBipartiteError(std::vector<std::string> odd_cycle)
    : std::invalid_argument("graph is not bipartite"), odd_cycle_(std::move(odd_cycle)) {}

BlockSum ind_by_blocks(const LabeledMultigraph& g, const TypeFilter& filter) {
  BipartiteVerdict b = is_bipartite(g);
  if (!b.bipartite) throw NotBipartiteError(std::move(b.odd_cycle));
  BlockSum out;
  for (const LabeledMultigraph& block : blocks(g).blocks) {
    out.per_block.push_back(ind(block, filter).value);
    out.total += out.per_block.back();
  }
  return out;
}

}  // namespace genknot
