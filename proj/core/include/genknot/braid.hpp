#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <vector>

#include "genknot/crossing.hpp"
#include "genknot/diagram.hpp"
#include "genknot/seifert.hpp"

namespace genknot {

// One generator: a crossing of the given type between strands i and i+1
// (1-based).
struct BraidLetter {
  CrossingType type = CrossingType::RealPos;
  std::size_t position = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  std::size_t strands = 1;
  std::vector<BraidLetter> letters;

  // Throws std::invalid_argument if a position is outside 1..strands-1 or
  // strands is 0.
  void check() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Annular closure with strands running downwards. Letter k (1-based) becomes
// crossing c<k>; the arc leaving row k at strand position p is s<p>r<k>.
// Positions untouched by any letter become free loops.
Diagram closure(const BraidWord& w);

// Word-level Seifert graph: vertex s<i> per strand, edge c<k> per letter
// joining s<i> and s<i+1>.
SeifertGraph word_seifert_graph(const BraidWord& w);

struct WordStats {
  std::size_t length = 0;
  std::size_t strands = 0;
  std::array<std::size_t, 5> histogram{};  // indexed by CrossingType
};

WordStats word_stats(const BraidWord& w);

// Cycles of the strand permutation (one transposition per letter); equals the
// number of closed curves of the closure.
std::size_t permutation_cycles(const BraidWord& w);

struct WordGeneratorOptions {
  std::size_t min_strands = 1;
  std::size_t max_strands = 6;
  std::size_t max_length = 12;
  CrossingTypeSet types = CrossingTypeSet::full();
};

// Uniform strand count and length in range, then uniform letters. Throws
// std::invalid_argument on an empty type set or bad strand range.
BraidWord random_word(std::mt19937_64& rng, const WordGeneratorOptions& options);

}  // namespace genknot
