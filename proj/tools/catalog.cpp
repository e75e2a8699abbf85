#include "catalog.hpp"

#include "genknot/codec.hpp"
#include "genknot/seifert.hpp"

namespace genknot::cli {
namespace {

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> kEntries{
      {"kink", "positive kink, one nugatory crossing", "X c1 R+ -a -b +b +a\n", "",
       {{"valid", "true"}, {"curves", "1"}, {"S", "2"}, {"gamma.edges", "1"}, {"nugatory", "c1"},
        {"bound.thm1", "PRECONDITION_FAILED"}, {"chain.thm2", "PRECONDITION_FAILED"}}},
      {"trefoil", "closure of a1 a1 a1", "braid n=2 : a1 a1 a1\n", "",
       {{"curves", "1"}, {"S", "2"}, {"gamma.edges", "3"}, {"nugatory", ""}, {"bound.ind", "0"},
        {"bound.thm1", "HOLDS"}, {"bound.thm1.check", "3 >= 2"}, {"chain.gb_upper", "2"}, {"chain.thm2", "HOLDS"}}},
      {"virtual-singular", "closure of a1 v1 s1: real, virtual and singular crossing", "braid n=2 : a1 v1 s1\n", "0",
       {{"curves", "1"}, {"S", "2"}, {"gamma.vertices", "2"}, {"gamma.edges", "3"}, {"nugatory", ""},
        {"bound.filter", "0"}, {"bound.ind", "0"}, {"bound.thm1", "HOLDS"}, {"bound.thm1.check", "3 >= 2"},
        {"bound.gb_upper", "2"}, {"chain.thm2", "HOLDS"}}},
      {"hopf", "closure of a1 a1, two components", "braid n=2 : a1 a1\n", "",
       {{"curves", "2"}, {"S", "2"}, {"nugatory", ""}, {"bound.thm1", "HOLDS"}, {"bound.thm1.check", "2 >= 2"}}},
      {"chain", "closure of a1 a1 a2 a2 on three strands", "braid n=3 : a1 a1 a2 a2\n", "",
       {{"curves", "3"}, {"S", "3"}, {"separating", "C2"}, {"blocks", "2"}, {"special", "false"},
        {"bound.thm1", "HOLDS"}, {"bound.thm1.check", "4 >= 4"}}},
      {"unknot", "one strand, no letters", "braid n=1 :\n", "",
       {{"free_loops", "1"}, {"S", "1"}, {"gamma.edges", "0"}, {"bound.thm1", "HOLDS"}}},
      {"single-edge", "one edge", "edge u v R+\n", "",
       {{"vertices", "2"}, {"edges", "1"}, {"ind.ind", "1"}, {"edge_bound", "PRECONDITION_FAILED"}}},
      {"p3", "path on three vertices", "edge a b R+\nedge b c R+\n", "",
       {{"ind.ind", "1"}, {"cut_edges", "e1,e2"}, {"blocks", "2"}, {"ind.blocks.sum", "2"}, {"ind.additive", "false"},
        {"edge_bound", "PRECONDITION_FAILED"}}},
      {"c4", "4-cycle", "edge a b R+\nedge b c R+\nedge c d R+\nedge d a R+\n", "",
       {{"bipartite", "true"}, {"planar", "true"}, {"ind.ind", "1"}, {"edge_bound", "HOLDS"},
        {"edge_bound.check", "4 >= 4"}}},
      {"triple", "two vertices joined by R+, V and S edges", "edge u w R+\nedge u w V\nedge u w S\n", "",
       {{"vertices", "2"}, {"edges", "3"}, {"bipartite", "true"}, {"ind.ind", "0"}, {"blocks", "1"},
        {"cut_vertices", ""}, {"edge_bound", "HOLDS"}, {"edge_bound.check", "3 >= 2"}}},
      {"glued-c4", "two 4-cycles sharing a vertex",
       "edge a b R+\nedge b c R+\nedge c d R+\nedge d a R+\nedge a e V\nedge e f V\nedge f g V\nedge g a V\n", "",
       {{"ind.ind", "2"}, {"ind0.ind", "1"}, {"blocks", "2"}, {"cut_vertices", "a"}, {"ind.blocks.sum", "2"},
        {"ind.additive", "true"}}},
      {"k4", "complete graph on four vertices",
       "edge a b plain\nedge a c plain\nedge a d plain\nedge b c plain\nedge b d plain\nedge c d plain\n", "",
       {{"planar", "true"}, {"bipartite", "false"}}},
      {"k5", "complete graph on five vertices",
       "edge a b plain\nedge a c plain\nedge a d plain\nedge a e plain\nedge b c plain\n"
       "edge b d plain\nedge b e plain\nedge c d plain\nedge c e plain\nedge d e plain\n",
       "", {{"planar", "false"}, {"kuratowski", "K5"}}},
      {"k33", "complete bipartite graph K3,3",
       "edge a x plain\nedge a y plain\nedge a z plain\nedge b x plain\nedge b y plain\n"
       "edge b z plain\nedge c x plain\nedge c y plain\nedge c z plain\n",
       "", {{"planar", "false"}, {"kuratowski", "K33"}, {"bipartite", "true"}}},
  };
  return kEntries;
}

Records diagram_side(const Diagram& d, std::string_view filter_name) {
  Records r = validation_records(d, validate(d));
  r.append(seifert_records(d));
  const TheoryFamily& theory = d.theory ? theory_family(*d.theory) : default_theory(d);
  r.add("theory.used", std::string(theory.name));
  const TypeFilter filter = filter_name.empty() ? TypeFilter::of(theory.gr_compatible) : TypeFilter::parse(filter_name);
  r.append(bound_records(crossing_bound(d, filter), "bound."));
  r.append(bound_records(braid_index_report(d, theory), "chain."));
  return r;
}

Records graph_side(const LabeledMultigraph& g) {
  Records r = graph_records(g);
  const IndSummary all = ind_records(g, TypeFilter::all());
  const IndSummary virt = ind_records(g, TypeFilter::parse("0"));
  for (const auto& [k, v] : all.records.items()) r.add("ind." + k, v);
  for (const auto& [k, v] : virt.records.items()) r.add("ind0." + k, v);
  r.append(edge_bound_records(edge_bound_check(g)));
  return r;
}

}  // namespace

std::span<const CatalogEntry> catalog() { return entries(); }

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const CatalogEntry& e : entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Records catalog_records(const CatalogEntry& e) {
  switch (detect_text_kind(e.text)) {
    case TextKind::Braid: return diagram_side(closure(parse_braid(e.text)), e.filter);
    case TextKind::Graph: return graph_side(parse_graph(e.text));
    case TextKind::Diagram: break;
  }
  return diagram_side(parse_diagram(e.text), e.filter);
}

std::vector<std::string> catalog_mismatches(const CatalogEntry& e) {
  const Records got = catalog_records(e);
  std::vector<std::string> out;
  for (const auto& [key, want] : e.expected) {
    const auto have = got.get(key);
    if (!have || *have != want) {
      out.push_back(std::string(key) + ": expected '" + std::string(want) + "', got " +
                    (have ? "'" + *have + "'" : std::string("nothing")));
    }
  }
  return out;
}

}  // namespace genknot::cli
