#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "records.hpp"

namespace genknot::cli {

struct CatalogEntry {
  std::string_view name;
  std::string_view description;
  std::string_view text;    // in one of the three input formats
  std::string_view filter;  // index filter for bounds; empty = the theory's GR-compatible set
  std::vector<std::pair<std::string_view, std::string_view>> expected;
};

std::span<const CatalogEntry> catalog();
const CatalogEntry* find_catalog_entry(std::string_view name);

// Everything the CLI computes for an entry: validation, Seifert data and
// bounds for diagrams and braids; graph verdicts, ind and the edge bound for
// graphs.
Records catalog_records(const CatalogEntry& e);

// Expected keys whose computed value differs, as "key: expected X, got Y".
std::vector<std::string> catalog_mismatches(const CatalogEntry& e);

}  // namespace genknot::cli
