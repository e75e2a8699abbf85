#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "genknot/braid.hpp"
#include "genknot/diagram.hpp"
#include "genknot/multigraph.hpp"

namespace genknot {

// Text formats (UTF-8, '#' starts a comment, tokens separated by blanks):
//
//   diagram:  theory <name> | loops <n> | X <id> <type> <p0> <p1> <p2> <p3>
//             ports counterclockwise, +arc = tail (Out), -arc = head (In)
//   braid:    braid n=<k> : a1 A2 v1 f3 s2 ...
//   graph:    edge <u> <v> <R+|R-|V|F|S|plain> | vertex <u>

enum class ParseErrorKind {
  Syntax,
  UnknownCrossingType,
  DanglingArc,
  DuplicateArcRole,
  BadPortPattern,
  DuplicateCrossing,
  Genus,
  TheoryMismatch,
  IndexOutOfRange,
  MissingHeader,
  SelfLoop,
  BadEdgeType,
};

std::string_view parse_error_kind_name(ParseErrorKind k);

// Lines and columns are 1-based; 0 means "not tied to a position".
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string message);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Reads the text without checking the diagram invariants.
Diagram parse_diagram_syntax(std::string_view text);

// Reads and validates; the first violation (in line order) is thrown as a
// ParseError located at the offending crossing.
Diagram parse_diagram(std::string_view text);

// Canonical form: theory line, loops line, then crossings in natural id
// order with ports rotated to start at the incoming pair.
std::string serialize_diagram(const Diagram& d);

BraidWord parse_braid(std::string_view text);
std::string serialize_braid(const BraidWord& w);

// Edge ids are e1, e2, ... in line order.
LabeledMultigraph parse_graph(std::string_view text);

// Isolated vertices first, then one line per edge in edge order. With
// `annotate_ids` each edge line carries its id as a trailing comment. Throws
// std::invalid_argument on loops, which the format cannot express.
std::string serialize_graph(const LabeledMultigraph& g, bool annotate_ids = false);

enum class TextKind { Diagram, Braid, Graph };

// Decided by the first keyword: braid, edge/vertex, anything else is a diagram.
TextKind detect_text_kind(std::string_view text);

}  // namespace genknot
