#include "genknot/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "genknot/graph_algorithms.hpp"
#include "genknot/planarity.hpp"
#include "genknot/seifert.hpp"

namespace genknot {
namespace {

long long twice_excess(std::size_t circles, std::size_t ind) {
  return 2 * (static_cast<long long>(circles) - static_cast<long long>(ind) - 1);
}

Verdict compare(std::size_t lhs, long long rhs) {
  return static_cast<long long>(lhs) >= rhs ? Verdict::Holds : Verdict::Violated;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Violated || b == Verdict::Violated) return Verdict::Violated;
  if (a == Verdict::PreconditionFailed || b == Verdict::PreconditionFailed) return Verdict::PreconditionFailed;
  if (a == Verdict::Holds || b == Verdict::Holds) return Verdict::Holds;
  return Verdict::Skipped;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::PreconditionFailed: return "PRECONDITION_FAILED";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

bool BoundReport::any_violated() const {
  return edge_bound_ok == Verdict::Violated || thm1_ok == Verdict::Violated || thm2_ok == Verdict::Violated;
}

bool BoundReport::any_precondition_failed() const {
  return thm1_ok == Verdict::PreconditionFailed || thm2_ok == Verdict::PreconditionFailed;
}

EdgeBoundResult edge_bound_check(const LabeledMultigraph& g) {
  EdgeBoundResult r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  const std::vector<std::string> bridges = cut_edges(g);
  const BipartiteVerdict bip = is_bipartite(g);
  r.preconditions = {
      {"connected", is_connected(g), ""},
      {"planar", is_planar(g).planar, ""},
      {"bipartite", bip.bipartite, bip.bipartite ? "" : "odd cycle " + join(bip.odd_cycle)},
      {"cut_edge_free", bridges.empty(), bridges.empty() ? "" : "cut edges " + join(bridges)},
  };
  const bool ok = std::all_of(r.preconditions.begin(), r.preconditions.end(),
                              [](const Assumption& a) { return a.holds; });
  if (!ok) {
    r.verdict = Verdict::PreconditionFailed;
    return r;
  }
  r.ind = ind(g, TypeFilter::all()).value;
  r.rhs = twice_excess(r.vertices, r.ind);
  r.verdict = compare(r.edges, r.rhs);
  return r;
}

BoundReport crossing_bound(const Diagram& d, const TypeFilter& filter) {
  require_valid(d);
  BoundReport r;
  const SeifertGraph gamma = seifert_graph(d);
  r.S = gamma.vertex_count();
  r.tc = d.crossing_count();
  r.filter = filter;
  r.nugatory = nugatory_set(d);

  IndResult filtered = ind(gamma, filter);
  r.ind_value = filtered.value;
  r.certificate = std::move(filtered.certificate);
  r.ind_all = filter.is_all() ? r.ind_value : ind(gamma, TypeFilter::all()).value;
  r.gb_upper = r.S - r.ind_value;
  r.thm2_rhs = twice_excess(r.S, r.ind_value);

  const bool connected = is_connected(gamma);
  const BipartiteVerdict bip = is_bipartite(gamma);
  const bool planar = is_planar(gamma).planar;
  const std::vector<std::string> bridges = cut_edges(gamma);
  r.assumptions = {
      {"gamma_connected", connected, connected ? "" : "crossing bound applied per component"},
      {"gamma_bipartite", bip.bipartite, ""},
      {"gamma_planar", planar, ""},
      {"gamma_cut_edge_free", bridges.empty(), join(bridges)},
      {"nugatory_free", r.nugatory.empty(), join(r.nugatory)},
  };
  if (!bip.bipartite || !planar) r.notes.push_back("Seifert graph is not bipartite and planar: implementation error");

  r.edge_bound_ok = edge_bound_check(gamma).verdict;

  if (!r.nugatory.empty()) {
    r.thm1_ok = Verdict::PreconditionFailed;
    return r;
  }
  r.thm1_rhs = twice_excess(r.S, r.ind_all);
  if (connected) {
    r.thm1_ok = compare(r.tc, r.thm1_rhs);
    return r;
  }
  r.notes.push_back("Seifert graph is split; the crossing bound is checked on every component separately");
  r.thm1_ok = Verdict::Skipped;
  for (const LabeledMultigraph& part : split_components(gamma)) {
    ComponentBound c;
    c.circles = part.vertex_count();
    c.crossings = part.edge_count();
    c.ind = ind(part, TypeFilter::all()).value;
    c.rhs = twice_excess(c.circles, c.ind);
    c.verdict = compare(c.crossings, c.rhs);
    r.thm1_ok = combine(r.thm1_ok, c.verdict);
    r.components.push_back(c);
  }
  return r;
}

GbUpperBound gb_upper_bound(const Diagram& d, const TypeFilter& filter, const TheoryFamily& theory) {
  for (CrossingType t : filter.crossing_types().items()) {
    if (!theory.gr_compatible.contains(t)) {
      throw std::invalid_argument(std::string(crossing_name(t)) + " is not GR-compatible in " +
                                  std::string(theory.name));
    }
  }
  if (!theory_check(d, theory)) {
    throw std::invalid_argument("diagram uses crossing types outside theory " + std::string(theory.name));
  }
  const SeifertGraph gamma = seifert_graph(d);
  IndResult r = ind(gamma, filter);
  return {gamma.vertex_count() - r.value, gamma.vertex_count(), r.value, std::move(r.certificate)};
}

BoundReport braid_index_report(const Diagram& d, const TheoryFamily& theory) {
  BoundReport r = crossing_bound(d, TypeFilter::of(theory.gr_compatible));
  const bool in_theory = theory_check(d, theory);
  const bool compatible = r.ind_value == r.ind_all;
  r.assumptions.push_back({"theory_allows_diagram", in_theory, std::string(theory.name)});
  r.assumptions.push_back({"gr_filter_attains_ind", compatible,
                           "ind over GR-compatible types " + std::to_string(r.ind_value) + ", over all types " +
                               std::to_string(r.ind_all)});
  if (!in_theory) {
    r.thm2_ok = Verdict::PreconditionFailed;
    return r;
  }
  if (theory.gr_compatible.empty()) {
    r.thm2_ok = Verdict::Skipped;
    r.notes.push_back("theory " + std::string(theory.name) +
                      " has no GR-compatible crossing types; braid index chain skipped");
    return r;
  }
  // A split diagram of k pieces only gives tc >= 2(S - ind - k); the chain
  // needs a connected Seifert graph.
  if (!r.nugatory.empty() || !compatible || !is_connected(seifert_graph(d))) {
    r.thm2_ok = Verdict::PreconditionFailed;
    return r;
  }
  r.thm2_ok = compare(r.tc, r.thm2_rhs);
  r.notes.push_back("gb_upper is an upper bound on the generalized braid index, not its value");
  return r;
}

}  // namespace genknot
