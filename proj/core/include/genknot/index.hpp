#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genknot/multigraph.hpp"

namespace genknot {

// Which edge labels may contribute independent edges. The named variants are
// the sign-restricted indices: "0" = {V}, "+" = {R+}, "-" = {R-},
// "0-" = {V, R-}, "+-" = {R+, R-}, "all" = every label.
class TypeFilter {
 public:
  TypeFilter() = default;
  explicit TypeFilter(LabelSet labels) : labels_(labels) {}

  static TypeFilter all() { return TypeFilter(LabelSet::full()); }
  static TypeFilter none() { return TypeFilter(LabelSet{}); }
  static TypeFilter of(CrossingTypeSet types);
  static std::optional<TypeFilter> named(std::string_view name);
  // A named variant, or a comma-separated list of label tokens (R+,V,...).
  // Throws std::invalid_argument.
  static TypeFilter parse(std::string_view text);

  bool allows(EdgeLabel l) const { return labels_.contains(l); }
  LabelSet labels() const { return labels_; }
  CrossingTypeSet crossing_types() const;
  bool is_all() const { return labels_ == LabelSet::full(); }
  std::string name() const;

  friend bool operator==(const TypeFilter&, const TypeFilter&) = default;

 private:
  LabelSet labels_;
};

// One contraction step: the edge taken into the independent set and the end
// point whose star is contracted next. Vertex names refer to the current
// (contracted) graph; a merged vertex keeps the name of the star centre.
struct IndStep {
  std::string edge;
  std::string vertex;

  friend bool operator==(const IndStep&, const IndStep&) = default;
};

using IndCertificate = std::vector<IndStep>;

struct IndResult {
  std::size_t value = 0;
  IndCertificate certificate;
  std::size_t states = 0;  // distinct search states evaluated
};

// Maximum size of an independent edge set whose edges pass `filter`.
//
// A set F is independent when its edges are singular, pairwise non-adjacent,
// and some e in F with an end point v leaves F \ {e} independent in
// G / star(v); the empty set is independent. The search walks these
// contraction sequences forward, memoising on the contracted graph together
// with the edges still eligible.
IndResult ind(const LabeledMultigraph& g, const TypeFilter& filter);

struct IndependenceVerdict {
  bool independent = false;
  IndCertificate certificate;  // a witnessing order when independent
};

// Decides the recursive definition for a given edge set. Throws UnknownIdError
// for edge ids not in g.
IndependenceVerdict is_independent(const LabeledMultigraph& g, std::span<const std::string> edges,
                                   const TypeFilter& filter);

struct CertificateCheck {
  bool ok = true;
  std::size_t failed_step = 0;  // 1-based; 0 when ok
  std::string reason;
};

// Replays a certificate: at every step the edge must be present, singular,
// allowed, non-adjacent to all later edges, and the vertex must be one of its
// end points; then star(vertex) is contracted.
CertificateCheck verify_certificate(const LabeledMultigraph& g, const IndCertificate& certificate,
                                    const TypeFilter& filter);

class NotBipartiteError : public std::invalid_argument {
 public:
  explicit NotBipartiteError(std::vector<std::string> odd_cycle);
  const std::vector<std::string>& odd_cycle() const noexcept { return odd_cycle_; }

 private:
  std::vector<std::string> odd_cycle_;
};

struct BlockSum {
  std::size_t total = 0;
  std::vector<std::size_t> per_block;  // aligned with blocks(g).blocks
};

// Sum of ind over the blocks of a bipartite graph. Throws NotBipartiteError.
BlockSum ind_by_blocks(const LabeledMultigraph& g, const TypeFilter& filter);

}  // namespace genknot
