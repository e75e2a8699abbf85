#include "records.hpp"

#include <algorithm>
#include <iomanip>

#include "genknot/graph_algorithms.hpp"
#include "genknot/planarity.hpp"
#include "genknot/seifert.hpp"

namespace genknot::cli {

void Records::add(std::string key, std::string value) { items_.emplace_back(std::move(key), std::move(value)); }

void Records::append(const Records& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

std::optional<std::string> Records::get(std::string_view key) const {
  for (const auto& [k, v] : items_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void Records::render(std::ostream& out, Format format) const {
  if (format == Format::Records) {
    for (const auto& [k, v] : items_) out << k << '=' << v << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& item : items_) width = std::max(width, item.first.size());
  for (const auto& [k, v] : items_) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << k << (v.empty() ? "-" : v) << '\n';
  }
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

Records validation_records(const Diagram& d, const ValidationReport& report) {
  Records r;
  r.add("valid", report.valid());
  r.add("crossings", d.crossing_count());
  r.add("free_loops", d.free_loops);
  if (d.theory) r.add("theory", std::string(theory_name(*d.theory)));
  for (const Violation& v : report.violations) r.add("violation", v.message);
  if (!report.valid()) return r;
  r.add("arcs", 2 * d.crossing_count());
  r.add("curves", curve_components(d));
  r.add("components", report.components.size());
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const ComponentEuler& e = report.components[i];
    r.add("component." + std::to_string(i + 1),
          "V=" + std::to_string(e.vertices) + " E=" + std::to_string(e.edges) + " F=" + std::to_string(e.faces) +
              " genus=" + std::to_string(e.genus()));
  }
  return r;
}

Records graph_records(const LabeledMultigraph& g) {
  Records r;
  r.add("vertices", g.vertex_count());
  r.add("edges", g.edge_count());
  const BipartiteVerdict bip = is_bipartite(g);
  r.add("bipartite", bip.bipartite);
  if (!bip.bipartite) r.add("odd_cycle", join(bip.odd_cycle));
  const PlanarityVerdict planar = is_planar(g);
  r.add("planar", planar.planar);
  if (!planar.planar) {
    r.add("kuratowski", planar.witness.kind == KuratowskiKind::K5 ? "K5" : "K33");
    r.add("kuratowski.edges", join(planar.witness.edges));
  }
  r.add("connected", is_connected(g));
  const BlockDecomposition b = blocks(g);
  r.add("blocks", b.blocks.size());
  r.add("cut_vertices", join(b.cut_vertices));
  r.add("cut_edges", join(cut_edges(g)));
  return r;
}

Records seifert_records(const Diagram& d) {
  Records r;
  const auto circles = seifert_circles(d);
  r.add("S", circles.size());
  for (const SeifertCircle& c : circles) {
    r.add("circle." + c.id, c.is_free_loop() ? std::string("free loop") : join(c.arcs, " "));
  }
  const SeifertGraph gamma = seifert_graph(d);
  r.add("gamma.vertices", gamma.vertex_count());
  r.add("gamma.edges", gamma.edge_count());
  for (const Edge& e : gamma.edges()) {
    r.add("gamma.edge." + e.id,
          gamma.vertex_name(e.u) + " " + gamma.vertex_name(e.v) + " " + std::string(label_token(e.label)));
  }
  r.add("gamma.bipartite", is_bipartite(gamma).bipartite);
  r.add("gamma.planar", is_planar(gamma).planar);
  r.add("gamma.connected", is_connected(gamma));
  r.add("nugatory", join(nugatory_set(d)));
  const std::vector<std::string> sep = separating_circles(d);
  r.add("separating", join(sep));
  if (!sep.empty()) r.add("separating.note", "decided as cut vertices of the Seifert graph");
  r.add("blocks", star_decompose(d).size());
  r.add("special", is_special(d));
  return r;
}

IndSummary ind_records(const LabeledMultigraph& g, const TypeFilter& filter) {
  IndSummary s;
  Records& r = s.records;
  const IndResult res = ind(g, filter);
  r.add("filter", filter.name());
  r.add("ind", res.value);
  for (std::size_t i = 0; i < res.certificate.size(); ++i) {
    r.add("certificate." + std::to_string(i + 1), res.certificate[i].edge + "@" + res.certificate[i].vertex);
  }
  r.add("certificate.valid", verify_certificate(g, res.certificate, filter).ok);
  try {
    const BlockSum sum = ind_by_blocks(g, filter);
    std::vector<std::string> parts;
    for (std::size_t v : sum.per_block) parts.push_back(std::to_string(v));
    r.add("blocks", sum.per_block.size());
    r.add("blocks.ind", join(parts, "+"));
    r.add("blocks.sum", sum.total);
    s.additivity_checked = true;
    s.additive = sum.total == res.value;
    r.add("additive", s.additive);
    if (!s.additive && !cut_edges(g).empty()) {
      r.add("additive.note", "graph has cut edges; a cut edge contributes more in its own block");
    }
  } catch (const NotBipartiteError& e) {
    r.add("warning", "graph is not bipartite (odd cycle " + join(e.odd_cycle()) + "); block sum not computed");
  }
  return s;
}

Records edge_bound_records(const EdgeBoundResult& e) {
  Records r;
  r.add("edge_bound", std::string(verdict_name(e.verdict)));
  if (e.verdict == Verdict::PreconditionFailed) {
    std::vector<std::string> failed;
    for (const Assumption& a : e.preconditions) {
      if (!a.holds) failed.push_back(a.name);
    }
    r.add("edge_bound.failed", join(failed));
  } else {
    r.add("edge_bound.check", std::to_string(e.edges) + " >= " + std::to_string(e.rhs));
  }
  return r;
}

Records bound_records(const BoundReport& b, std::string_view prefix) {
  Records r;
  const std::string p(prefix);
  r.add(p + "S", b.S);
  r.add(p + "tc", b.tc);
  r.add(p + "filter", b.filter.name());
  r.add(p + "ind", b.ind_value);
  r.add(p + "ind_all", b.ind_all);
  r.add(p + "nugatory", join(b.nugatory));
  r.add(p + "edge_bound", std::string(verdict_name(b.edge_bound_ok)));
  r.add(p + "thm1", std::string(verdict_name(b.thm1_ok)));
  if (b.thm1_ok == Verdict::Holds || b.thm1_ok == Verdict::Violated) {
    if (b.components.empty()) {
      r.add(p + "thm1.check", std::to_string(b.tc) + " >= " + std::to_string(b.thm1_rhs));
    }
    for (std::size_t i = 0; i < b.components.size(); ++i) {
      const ComponentBound& c = b.components[i];
      r.add(p + "thm1.component." + std::to_string(i + 1),
            std::to_string(c.crossings) + " >= " + std::to_string(c.rhs) + " " + std::string(verdict_name(c.verdict)));
    }
  }
  r.add(p + "gb_upper", b.gb_upper);
  r.add(p + "thm2_rhs", b.thm2_rhs);
  r.add(p + "thm2", std::string(verdict_name(b.thm2_ok)));
  for (const Assumption& a : b.assumptions) {
    r.add(p + "assume." + a.name, a.holds ? std::string("yes") : "no" + (a.note.empty() ? "" : " (" + a.note + ")"));
  }
  for (const std::string& n : b.notes) r.add(p + "note", n);
  return r;
}

const TheoryFamily& default_theory(const Diagram& d) {
  for (const TheoryFamily& f : theory_table()) {
    if (theory_check(d, f)) return f;
  }
  return theory_family(Theory::Unrestricted);
}

}  // namespace genknot::cli
