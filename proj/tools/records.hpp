#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genknot/bounds.hpp"
#include "genknot/diagram.hpp"
#include "genknot/index.hpp"
#include "genknot/multigraph.hpp"
#include "genknot/theory.hpp"

namespace genknot::cli {

enum class Format { Human, Records };

// Ordered key=value report. Keys are dotted; values never contain newlines.
class Records {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void append(const Records& other);

  std::optional<std::string> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& items() const { return items_; }

  void render(std::ostream& out, Format format) const;

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

std::string join(const std::vector<std::string>& xs, std::string_view sep = ",");

Records validation_records(const Diagram& d, const ValidationReport& report);

// Circles, Seifert graph, its verdicts and the decomposition data.
Records seifert_records(const Diagram& d);

struct IndSummary {
  Records records;
  bool additivity_checked = false;
  bool additive = true;
};

IndSummary ind_records(const LabeledMultigraph& g, const TypeFilter& filter);

Records graph_records(const LabeledMultigraph& g);

Records bound_records(const BoundReport& report, std::string_view prefix);

Records edge_bound_records(const EdgeBoundResult& r);

// Smallest row of the theory table that allows every crossing type present.
const TheoryFamily& default_theory(const Diagram& d);

}  // namespace genknot::cli
