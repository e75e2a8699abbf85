#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genknot/braid.hpp"
#include "genknot/theory.hpp"

namespace genknot::cli {

struct SweepOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  WordGeneratorOptions generator;
  // Theory for the braid index chain; when unset each diagram uses the
  // smallest theory that allows it.
  std::optional<TheoryFamily> theory;
  std::optional<std::filesystem::path> repro_dir;
};

struct SweepViolation {
  std::size_t index = 0;
  std::string check;
  std::string word;  // braid text
  std::optional<std::filesystem::path> reproducer;
};

struct SweepSummary {
  std::size_t words = 0;
  std::map<std::string, std::size_t> checks;   // property -> times checked
  std::map<std::string, std::size_t> skipped;  // property -> times skipped
  std::vector<SweepViolation> violations;
};

// Word i is drawn from a generator seeded with (seed, i), so any single word
// can be regenerated on its own.
BraidWord sweep_word(std::uint64_t seed, std::size_t index, const WordGeneratorOptions& options);

// Runs every property on each generated closure (and on a copy with one
// component reversed).
SweepSummary run_sweep(const SweepOptions& options);

}  // namespace genknot::cli
