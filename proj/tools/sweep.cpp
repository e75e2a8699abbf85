#include "sweep.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "genknot/bounds.hpp"
#include "genknot/codec.hpp"
#include "genknot/graph_algorithms.hpp"
#include "genknot/planarity.hpp"
#include "genknot/seifert.hpp"
#include "records.hpp"

namespace genknot::cli {
namespace {

// Strand position encoded in a closure arc name s<p>r<k>.
std::size_t arc_position(const std::string& arc) {
  return std::stoul(arc.substr(1, arc.find('r') - 1));
}

bool matches_word_graph(const BraidWord& w, const Diagram& d, const SeifertGraph& gamma) {
  const auto circles = seifert_circles(d);
  std::vector<std::size_t> position(circles.size(), 0);
  std::size_t free = 0;
  for (std::size_t c = 0; c < circles.size(); ++c) {
    if (circles[c].is_free_loop()) {
      ++free;
      continue;
    }
    position[c] = arc_position(circles[c].arcs.front());
    for (const std::string& a : circles[c].arcs) {
      if (arc_position(a) != position[c]) return false;
    }
  }
  std::set<std::size_t> used;
  for (const BraidLetter& l : w.letters) {
    used.insert(l.position);
    used.insert(l.position + 1);
  }
  if (free != w.strands - used.size() || gamma.edge_count() != w.letters.size()) return false;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Edge& e = gamma.edge(gamma.edge_index("c" + std::to_string(k + 1)));
    const auto [lo, hi] = std::minmax(position[e.u], position[e.v]);
    if (lo != w.letters[k].position || hi != lo + 1 || e.label != edge_label(w.letters[k].type)) return false;
  }
  return true;
}

bool same_unlabelled(const LabeledMultigraph& a, const LabeledMultigraph& b) {
  if (a.vertex_names() != b.vertex_names() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    if (a.edge(e).id != b.edge(e).id || a.edge(e).u != b.edge(e).u || a.edge(e).v != b.edge(e).v) return false;
  }
  return true;
}

// seed_seq keeps 32 bits per word, so the 64-bit seed is split.
std::vector<std::uint32_t> seed_words(std::uint64_t seed, std::size_t index, std::uint32_t stream) {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t{index} >> 32), stream};
}

class Checker {
 public:
  Checker(SweepSummary& summary, const SweepOptions& options, std::size_t index, const BraidWord& w)
      : summary_(summary), options_(options), index_(index), word_(w) {}

  void expect(const std::string& check, bool ok) {
    ++summary_.checks[check];
    if (ok) return;
    SweepViolation v{index_, check, serialize_braid(word_), std::nullopt};
    if (options_.repro_dir) {
      std::filesystem::create_directories(*options_.repro_dir);
      const auto path = *options_.repro_dir /
                        ("sweep-" + std::to_string(options_.seed) + "-" + std::to_string(index_) + ".braid");
      std::ofstream out(path, std::ios::app);
      out << "# seed=" << options_.seed << " index=" << index_ << " check=" << check << '\n' << v.word;
      v.reproducer = path;
    }
    summary_.violations.push_back(std::move(v));
  }

  void skip(const std::string& check) { ++summary_.skipped[check]; }

  // Crossing bound and Seifert graph shape; shared by both orientations.
  void check_diagram(const Diagram& d, const std::string& tag) {
    const SeifertGraph gamma = seifert_graph(d);
    expect(tag + "gamma_bipartite", is_bipartite(gamma).bipartite);
    expect(tag + "gamma_planar", is_planar(gamma).planar);

    const std::vector<std::string> nug = nugatory_set(d);
    const std::vector<std::string> bridges = cut_edges(gamma);
    expect(tag + "nugatory_is_cut_edge", std::set(nug.begin(), nug.end()) == std::set(bridges.begin(), bridges.end()));

    const BoundReport report = crossing_bound(d, TypeFilter::all());
    if (!nug.empty()) {
      skip(tag + "thm1");
    } else if (is_connected(gamma)) {
      expect(tag + "thm1", report.thm1_ok == Verdict::Holds);
    } else {
      expect(tag + "thm1_per_component", report.thm1_ok == Verdict::Holds);
    }
    const EdgeBoundResult eb = edge_bound_check(gamma);
    if (eb.verdict == Verdict::PreconditionFailed) {
      skip(tag + "edge_bound");
    } else {
      expect(tag + "edge_bound", eb.verdict == Verdict::Holds);
    }
  }

  void run() {
    const Diagram d = closure(word_);
    expect("valid", validate(d).valid());
    const SeifertGraph gamma = seifert_graph(d);
    expect("circles_equal_strands", gamma.vertex_count() == word_.strands);
    expect("word_graph", matches_word_graph(word_, d, gamma));
    expect("curves_equal_cycles", curve_components(d) == permutation_cycles(word_));
    expect("type_forgetting", same_unlabelled(gamma, seifert_graph(classicalize(d))));
    expect("roundtrip", serialize_diagram(parse_diagram(serialize_diagram(d))) == serialize_diagram(d) &&
                            parse_braid(serialize_braid(word_)) == word_);
    check_diagram(d, "");

    if (cut_edges(gamma).empty() && is_bipartite(gamma).bipartite) {
      for (const TypeFilter& f : {TypeFilter::all(), TypeFilter::parse("0")}) {
        expect("block_additivity", ind(gamma, f).value == ind_by_blocks(gamma, f).total);
      }
    } else {
      skip("block_additivity");
    }

    const TheoryFamily& theory = options_.theory ? *options_.theory : default_theory(d);
    if (theory_check(d, theory)) {
      const GbUpperBound gb = gb_upper_bound(d, TypeFilter::of(theory.gr_compatible), theory);
      expect("gb_upper_at_most_strands", gb.value <= word_.strands);
      expect("gb_certificate", gb.certificate.size() == gb.S - gb.value &&
                                   verify_certificate(gamma, gb.certificate, TypeFilter::of(theory.gr_compatible)).ok);
      const BoundReport chain = braid_index_report(d, theory);
      if (chain.thm2_ok == Verdict::Holds || chain.thm2_ok == Verdict::Violated) {
        expect("thm2_chain", chain.thm2_ok == Verdict::Holds);
      } else {
        skip("thm2_chain");
      }
    } else {
      skip("gb_upper_at_most_strands");
      skip("thm2_chain");
    }

    // Same shadow with one component running the other way.
    const auto curves = curve_arcs(d);
    if (!curves.empty()) {
      const std::vector<std::uint32_t> words = seed_words(options_.seed, index_, 1);
      std::seed_seq seq(words.begin(), words.end());
      std::mt19937_64 rng(seq);
      const auto& curve = curves[std::uniform_int_distribution<std::size_t>(0, curves.size() - 1)(rng)];
      const Diagram r = reverse_curve(d, curve.front());
      expect("reversed.valid", validate(r).valid());
      check_diagram(r, "reversed.");
    }
  }

 private:
  SweepSummary& summary_;
  const SweepOptions& options_;
  std::size_t index_;
  const BraidWord& word_;
};

}  // namespace

BraidWord sweep_word(std::uint64_t seed, std::size_t index, const WordGeneratorOptions& options) {
  const std::vector<std::uint32_t> words = seed_words(seed, index, 0);
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 rng(seq);
  return random_word(rng, options);
}

SweepSummary run_sweep(const SweepOptions& options) {
  SweepSummary summary;
  for (std::size_t i = 0; i < options.count; ++i) {
    const BraidWord w = sweep_word(options.seed, i, options.generator);
    Checker(summary, options, i, w).run();
    ++summary.words;
  }
  return summary;
}

}  // namespace genknot::cli
