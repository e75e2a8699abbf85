#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genknot/diagram.hpp"
#include "genknot/index.hpp"
#include "genknot/multigraph.hpp"
#include "genknot/theory.hpp"

namespace genknot {

enum class Verdict { Holds, Violated, PreconditionFailed, Skipped };

// HOLDS, VIOLATED, PRECONDITION_FAILED, SKIPPED.
std::string_view verdict_name(Verdict v);

// A hypothesis that was checked rather than assumed.
struct Assumption {
  std::string name;
  bool holds = false;
  std::string note;
};

// |E| >= 2(|V| - ind - 1) for connected, planar, bipartite graphs without a
// cut edge; ind is taken over all labels.
struct EdgeBoundResult {
  Verdict verdict = Verdict::Skipped;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t ind = 0;
  long long rhs = 0;
  std::vector<Assumption> preconditions;
};

EdgeBoundResult edge_bound_check(const LabeledMultigraph& g);

// The crossing bound on one connected component of the Seifert graph.
struct ComponentBound {
  std::size_t circles = 0;
  std::size_t crossings = 0;
  std::size_t ind = 0;
  long long rhs = 0;
  Verdict verdict = Verdict::Skipped;
};

struct BoundReport {
  std::size_t S = 0;
  std::size_t tc = 0;  // crossing count; a true total crossing number only without nugatory crossings
  TypeFilter filter;
  std::size_t ind_value = 0;  // under `filter`
  std::size_t ind_all = 0;    // under every label; this is ind of the diagram
  IndCertificate certificate;  // for ind_value
  std::vector<std::string> nugatory;

  Verdict edge_bound_ok = Verdict::Skipped;

  // tc >= 2(S - ind_all - 1), per component of the Seifert graph when it is
  // split.
  Verdict thm1_ok = Verdict::Skipped;
  long long thm1_rhs = 0;
  std::vector<ComponentBound> components;  // filled when split

  std::size_t gb_upper = 0;  // S - ind_value
  long long thm2_rhs = 0;    // 2(gb_upper - 1)
  Verdict thm2_ok = Verdict::Skipped;  // set by braid_index_report only

  std::vector<Assumption> assumptions;
  std::vector<std::string> notes;

  bool any_violated() const;
  bool any_precondition_failed() const;
};

// Crossing bound for a valid diagram. Never throws on unmet hypotheses; they
// show up as PRECONDITION_FAILED and in `assumptions`.
BoundReport crossing_bound(const Diagram& d, const TypeFilter& filter);

struct GbUpperBound {
  std::size_t value = 0;  // S - ind
  std::size_t S = 0;
  std::size_t ind = 0;
  IndCertificate certificate;  // each step merges one circle away
};

// Upper bound on the generalized braid index. Throws std::invalid_argument
// when the filter allows a crossing type outside the theory's GR-compatible
// set, or the diagram uses a type the theory does not allow.
GbUpperBound gb_upper_bound(const Diagram& d, const TypeFilter& filter, const TheoryFamily& theory);

// Full chain tc >= 2(S - ind - 1) >= 2(gb_upper - 1) >= 2(gb - 1) with the
// filter set to the theory's GR-compatible types. The first and the combined
// inequality are checked; the last is reported only, since gb_upper is an
// upper bound and not the index itself.
BoundReport braid_index_report(const Diagram& d, const TheoryFamily& theory);

}  // namespace genknot
