#include "genknot/braid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace genknot {
namespace {

std::string arc_name(std::size_t position, std::size_t row) {
  return "s" + std::to_string(position) + "r" + std::to_string(row);
}

}  // namespace

void BraidWord::check() const {
  if (strands == 0) throw std::invalid_argument("braid needs at least one strand");
  for (const BraidLetter& l : letters) {
    if (l.position < 1 || l.position + 1 > strands) {
      throw std::invalid_argument("position " + std::to_string(l.position) + " out of range for n=" +
                                  std::to_string(strands));
    }
  }
}

Diagram closure(const BraidWord& w) {
  w.check();
  const std::size_t rows = w.letters.size();
  // Rows touching each strand position, top to bottom.
  std::vector<std::vector<std::size_t>> touching(w.strands + 1);
  for (std::size_t k = 0; k < rows; ++k) {
    touching[w.letters[k].position].push_back(k);
    touching[w.letters[k].position + 1].push_back(k);
  }

  // Port layout, counterclockwise seen from above with strands moving down:
  // 0 = top right (in, i+1), 1 = top left (in, i), 2 = bottom left (out, i),
  // 3 = bottom right (out, i+1).
  Diagram d;
  d.crossings.resize(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    const BraidLetter& l = w.letters[k];
    Crossing& c = d.crossings[k];
    c.id = "c" + std::to_string(k + 1);
    c.type = l.type;
    c.ports[2] = {arc_name(l.position, k + 1), PortDirection::Out};
    c.ports[3] = {arc_name(l.position + 1, k + 1), PortDirection::Out};
  }
  for (std::size_t p = 1; p <= w.strands; ++p) {
    const auto& rs = touching[p];
    if (rs.empty()) {
      ++d.free_loops;
      continue;
    }
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const std::size_t from = rs[j];
      const std::size_t to = rs[(j + 1) % rs.size()];
      const bool left = w.letters[to].position == p;
      d.crossings[to].ports[left ? 1 : 0] = {arc_name(p, from + 1), PortDirection::In};
    }
  }
  return d;
}

SeifertGraph word_seifert_graph(const BraidWord& w) {
  w.check();
  SeifertGraph g;
  for (std::size_t i = 1; i <= w.strands; ++i) g.add_vertex("s" + std::to_string(i));
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const BraidLetter& l = w.letters[k];
    g.add_edge("c" + std::to_string(k + 1), l.position - 1, l.position, edge_label(l.type));
  }
  return g;
}

WordStats word_stats(const BraidWord& w) {
  WordStats s;
  s.length = w.letters.size();
  s.strands = w.strands;
  for (const BraidLetter& l : w.letters) ++s.histogram[static_cast<std::size_t>(l.type)];
  return s;
}

std::size_t permutation_cycles(const BraidWord& w) {
  w.check();
  std::vector<std::size_t> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (const BraidLetter& l : w.letters) std::swap(perm[l.position - 1], perm[l.position]);
  std::vector<bool> seen(w.strands, false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < w.strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

BraidWord random_word(std::mt19937_64& rng, const WordGeneratorOptions& options) {
  if (options.types.empty()) throw std::invalid_argument("no crossing types to draw from");
  if (options.min_strands < 1 || options.min_strands > options.max_strands) {
    throw std::invalid_argument("bad strand range");
  }
  const auto types = options.types.items();
  BraidWord w;
  w.strands = std::uniform_int_distribution<std::size_t>(options.min_strands, options.max_strands)(rng);
  if (w.strands < 2) return w;
  const std::size_t length = std::uniform_int_distribution<std::size_t>(0, options.max_length)(rng);
  std::uniform_int_distribution<std::size_t> pick_type(0, types.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_pos(1, w.strands - 1);
  for (std::size_t k = 0; k < length; ++k) {
    const CrossingType t = types[pick_type(rng)];
    w.letters.push_back({t, pick_pos(rng)});
  }
  return w;
}

}  // namespace genknot
