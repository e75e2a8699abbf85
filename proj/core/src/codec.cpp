#include "genknot/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

namespace genknot {
namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Splits into non-empty lines of blank-separated tokens, dropping comments.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t b = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > b) line.tokens.push_back({raw.substr(b, i - b), b + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(ParseErrorKind kind, const Line& line, std::size_t column, std::string message) {
  throw ParseError(kind, line.number, column, std::move(message));
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool alnum(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

bool identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Where each crossing and each of its ports was read.
struct DiagramLocations {
  std::map<std::string, std::pair<std::size_t, std::size_t>> crossing;  // id -> (line, column)
  std::map<std::pair<std::string, std::string>, std::size_t> port;      // (id, arc) -> column
};

Diagram parse_diagram_impl(std::string_view text, DiagramLocations* where) {
  Diagram d;
  bool saw_theory = false, saw_loops = false;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    const std::string_view key = t[0].text;
    if (key == "theory") {
      if (t.size() != 2) fail(ParseErrorKind::Syntax, line, t[0].column, "theory line needs exactly one name");
      if (saw_theory) fail(ParseErrorKind::Syntax, line, t[0].column, "duplicate theory line");
      const auto th = parse_theory_name(t[1].text);
      if (!th) fail(ParseErrorKind::Syntax, line, t[1].column, "unknown theory " + std::string(t[1].text));
      d.theory = *th;
      saw_theory = true;
    } else if (key == "loops") {
      if (t.size() != 2) fail(ParseErrorKind::Syntax, line, t[0].column, "loops line needs exactly one count");
      if (saw_loops) fail(ParseErrorKind::Syntax, line, t[0].column, "duplicate loops line");
      const auto n = parse_count(t[1].text);
      if (!n) fail(ParseErrorKind::Syntax, line, t[1].column, "bad loop count " + std::string(t[1].text));
      d.free_loops = *n;
      saw_loops = true;
    } else if (key == "X") {
      if (t.size() != 7) {
        fail(ParseErrorKind::Syntax, line, t[0].column, "crossing line needs an id, a type and four ports");
      }
      Crossing c;
      c.id = std::string(t[1].text);
      if (!identifier(c.id)) fail(ParseErrorKind::Syntax, line, t[1].column, "bad crossing id " + c.id);
      const auto type = parse_crossing_token(t[2].text);
      if (!type) {
        fail(ParseErrorKind::UnknownCrossingType, line, t[2].column,
             "unknown crossing type " + std::string(t[2].text));
      }
      c.type = *type;
      for (std::size_t p = 0; p < 4; ++p) {
        const Token& tok = t[3 + p];
        const char sign = tok.text.front();
        const std::string_view arc = tok.text.substr(1);
        if ((sign != '+' && sign != '-') || !alnum(arc)) {
          fail(ParseErrorKind::Syntax, line, tok.column, "bad port " + std::string(tok.text));
        }
        c.ports[p] = {std::string(arc), sign == '+' ? PortDirection::Out : PortDirection::In};
        if (where) where->port.try_emplace({c.id, std::string(arc)}, tok.column);
      }
      if (where) where->crossing.try_emplace(c.id, std::pair{line.number, t[1].column});
      d.crossings.push_back(std::move(c));
    } else {
      fail(ParseErrorKind::Syntax, line, t[0].column, "unexpected token " + std::string(key));
    }
  }
  return d;
}

ParseErrorKind error_kind(ViolationKind v) {
  switch (v) {
    case ViolationKind::BadIdentifier: return ParseErrorKind::Syntax;
    case ViolationKind::DuplicateCrossingId: return ParseErrorKind::DuplicateCrossing;
    case ViolationKind::BadPortPattern: return ParseErrorKind::BadPortPattern;
    case ViolationKind::ArcTwoTails:
    case ViolationKind::ArcTwoHeads: return ParseErrorKind::DuplicateArcRole;
    case ViolationKind::ArcNoTail:
    case ViolationKind::ArcNoHead: return ParseErrorKind::DanglingArc;
    case ViolationKind::NonPlanar: return ParseErrorKind::Genus;
    case ViolationKind::TheoryMismatch: return ParseErrorKind::TheoryMismatch;
  }
  return ParseErrorKind::Syntax;
}

const char* letter_char(CrossingType t) {
  switch (t) {
    case CrossingType::RealPos: return "a";
    case CrossingType::RealNeg: return "A";
    case CrossingType::Virtual: return "v";
    case CrossingType::Flat: return "f";
    case CrossingType::Singular: return "s";
  }
  return "?";
}

std::optional<CrossingType> letter_type(char c) {
  switch (c) {
    case 'a': return CrossingType::RealPos;
    case 'A': return CrossingType::RealNeg;
    case 'v': return CrossingType::Virtual;
    case 'f': return CrossingType::Flat;
    case 's': return CrossingType::Singular;
    default: return std::nullopt;
  }
}

}  // namespace

std::string_view parse_error_kind_name(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::UnknownCrossingType: return "unknown-crossing-type";
    case ParseErrorKind::DanglingArc: return "dangling-arc";
    case ParseErrorKind::DuplicateArcRole: return "duplicate-arc-role";
    case ParseErrorKind::BadPortPattern: return "bad-port-pattern";
    case ParseErrorKind::DuplicateCrossing: return "duplicate-crossing";
    case ParseErrorKind::Genus: return "genus";
    case ParseErrorKind::TheoryMismatch: return "theory-mismatch";
    case ParseErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ParseErrorKind::MissingHeader: return "missing-header";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::BadEdgeType: return "bad-edge-type";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

Diagram parse_diagram_syntax(std::string_view text) { return parse_diagram_impl(text, nullptr); }

Diagram parse_diagram(std::string_view text) {
  DiagramLocations where;
  Diagram d = parse_diagram_impl(text, &where);
  const ValidationReport report = validate(d);
  if (report.valid()) return d;

  struct Located {
    std::size_t line, column;
    const Violation* v;
  };
  std::vector<Located> located;
  for (const Violation& v : report.violations) {
    std::size_t line = 0, column = 0;
    if (auto it = where.crossing.find(v.crossing); it != where.crossing.end()) {
      std::tie(line, column) = it->second;
      if (auto p = where.port.find({v.crossing, v.arc}); p != where.port.end()) column = p->second;
    }
    located.push_back({line, column, &v});
  }
  const auto first = std::min_element(located.begin(), located.end(), [](const Located& a, const Located& b) {
    // Violations without a location sort last.
    return std::tuple(a.line == 0, a.line, a.column) < std::tuple(b.line == 0, b.line, b.column);
  });
  throw ParseError(error_kind(first->v->kind), first->line, first->column, first->v->message);
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream out;
  if (d.theory) out << "theory " << theory_name(*d.theory) << '\n';
  if (d.free_loops > 0) out << "loops " << d.free_loops << '\n';
  std::vector<const Crossing*> order;
  for (const Crossing& c : d.crossings) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](const Crossing* a, const Crossing* b) { return natural_less(a->id, b->id); });
  for (const Crossing* c : order) {
    const int r = in_pair_offset(*c).value_or(0);
    out << "X " << c->id << ' ' << crossing_token(c->type);
    for (int k = 0; k < 4; ++k) {
      const Port& p = c->ports[static_cast<std::size_t>((r + k) % 4)];
      out << ' ' << (p.direction == PortDirection::Out ? '+' : '-') << p.arc;
    }
    out << '\n';
  }
  return out.str();
}

BraidWord parse_braid(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front().text != "braid") {
    throw ParseError(ParseErrorKind::MissingHeader, lines.empty() ? 0 : lines.front().number,
                     lines.empty() ? 0 : lines.front().tokens.front().column, "missing braid header");
  }
  // Flatten; the header may be written as "n=2 :" or "n=2:".
  std::vector<std::pair<const Line*, Token>> tokens;
  for (const Line& l : lines) {
    for (const Token& t : l.tokens) tokens.emplace_back(&l, t);
  }
  const Line& head = lines.front();
  if (tokens.size() < 2 || tokens[1].second.text.substr(0, 2) != "n=") {
    fail(ParseErrorKind::MissingHeader, head, head.tokens.front().column, "braid header needs n=<strands>");
  }
  std::string_view count = tokens[1].second.text.substr(2);
  std::size_t next = 2;
  if (!count.empty() && count.back() == ':') {
    count.remove_suffix(1);
  } else if (next < tokens.size() && tokens[next].second.text == ":") {
    ++next;
  } else {
    fail(ParseErrorKind::MissingHeader, head, tokens[1].second.column, "braid header must end with ':'");
  }
  const auto n = parse_count(count);
  if (!n || *n == 0) fail(ParseErrorKind::Syntax, head, tokens[1].second.column, "bad strand count");

  BraidWord w;
  w.strands = *n;
  for (; next < tokens.size(); ++next) {
    const auto& [line, tok] = tokens[next];
    const auto type = letter_type(tok.text.front());
    const auto pos = parse_count(tok.text.substr(1));
    if (!type || !pos) fail(ParseErrorKind::Syntax, *line, tok.column, "bad braid letter " + std::string(tok.text));
    if (*pos < 1 || *pos >= w.strands) {
      fail(ParseErrorKind::IndexOutOfRange, *line, tok.column,
           "position " + std::to_string(*pos) + " out of range for n=" + std::to_string(w.strands));
    }
    w.letters.push_back({*type, *pos});
  }
  return w;
}

std::string serialize_braid(const BraidWord& w) {
  std::string out = "braid n=" + std::to_string(w.strands) + " :";
  for (const BraidLetter& l : w.letters) out += std::string(" ") + letter_char(l.type) + std::to_string(l.position);
  return out + "\n";
}

LabeledMultigraph parse_graph(std::string_view text) {
  LabeledMultigraph g;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0].text == "vertex") {
      if (t.size() != 2) fail(ParseErrorKind::Syntax, line, t[0].column, "vertex line needs exactly one name");
      g.ensure_vertex(t[1].text);
    } else if (t[0].text == "edge") {
      if (t.size() != 4) fail(ParseErrorKind::Syntax, line, t[0].column, "edge line needs two vertices and a type");
      if (t[1].text == t[2].text) fail(ParseErrorKind::SelfLoop, line, t[2].column, "self-loop not allowed in input");
      const auto label = parse_label_token(t[3].text);
      if (!label) fail(ParseErrorKind::BadEdgeType, line, t[3].column, "unknown edge type " + std::string(t[3].text));
      g.add_edge("e" + std::to_string(g.edge_count() + 1), t[1].text, t[2].text, *label);
    } else {
      fail(ParseErrorKind::Syntax, line, t[0].column, "unexpected token " + std::string(t[0].text));
    }
  }
  return g;
}

std::string serialize_graph(const LabeledMultigraph& g, bool annotate_ids) {
  std::string out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out += "vertex " + g.vertex_name(v) + "\n";
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw std::invalid_argument("edge " + e.id + " is a loop and cannot be written");
    out += "edge " + g.vertex_name(e.u) + " " + g.vertex_name(e.v) + " " + std::string(label_token(e.label));
    if (annotate_ids) out += "  # " + e.id;
    out += "\n";
  }
  return out;
}

TextKind detect_text_kind(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) return TextKind::Diagram;
  const std::string_view key = lines.front().tokens.front().text;
  if (key == "braid") return TextKind::Braid;
  if (key == "edge" || key == "vertex") return TextKind::Graph;
  return TextKind::Diagram;
}

}  // namespace genknot
