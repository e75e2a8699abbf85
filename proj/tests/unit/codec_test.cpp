#include <gtest/gtest.h>

#include "genknot/braid.hpp"
#include "genknot/codec.hpp"
#include "test_support.hpp"

using namespace genknot;

namespace {

ParseErrorKind kind_of(std::string_view text, Diagram (*parse)(std::string_view) = parse_diagram) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseErrorKind::Syntax;
}

template <typename F>
ParseError error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError(ParseErrorKind::Syntax, 0, 0, "");
}

}  // namespace

TEST(Codec, ParsesKink) {
  const Diagram d = parse_diagram("# comment\nX c1 R+ -a -b +b +a  # trailing\n");
  ASSERT_EQ(d.crossings.size(), 1u);
  EXPECT_EQ(d.crossings[0].id, "c1");
  EXPECT_EQ(d.crossings[0].type, CrossingType::RealPos);
  EXPECT_EQ(d.crossings[0].ports[0], (Port{"a", PortDirection::In}));
  EXPECT_EQ(d.crossings[0].ports[3], (Port{"a", PortDirection::Out}));
  EXPECT_FALSE(d.theory.has_value());
  EXPECT_EQ(d.free_loops, 0u);
}

TEST(Codec, SerializeRotatesToTheIncomingPair) {
  const Diagram d = parse_diagram("X c1 R- +b +a -a -b\n");
  EXPECT_EQ(serialize_diagram(d), "X c1 R- -a -b +b +a\n");
}

TEST(Codec, SerializeOrdersCrossingsNaturally) {
  const std::string text = "theory virtual\nloops 2\nX c10 V -a -b +b +a\nX c2 R+ -c -d +d +c\n";
  EXPECT_EQ(serialize_diagram(parse_diagram(text)),
            "theory virtual\nloops 2\nX c2 R+ -c -d +d +c\nX c10 V -a -b +b +a\n");
}

TEST(Codec, DiagramRoundTrip) {
  for (const char* w : {"braid n=2 : a1 v1 s1", "braid n=4 : a1 A2 v3 f1 s2 a3", "braid n=3 :"}) {
    const Diagram d = testing_support::braid_closure(w);
    const std::string text = serialize_diagram(d);
    EXPECT_EQ(serialize_diagram(parse_diagram(text)), text) << w;
    EXPECT_EQ(parse_diagram(text), d) << w;  // closure already emits canonical rotations
  }
}

TEST(Codec, DiagramErrorKinds) {
  EXPECT_EQ(kind_of("X c1 Q -a -b +b +a\n"), ParseErrorKind::UnknownCrossingType);
  EXPECT_EQ(kind_of("X c1 R+ -a -b +c +a\n"), ParseErrorKind::DanglingArc);
  EXPECT_EQ(kind_of("X c1 R+ -a -b +a +a\n"), ParseErrorKind::DuplicateArcRole);
  EXPECT_EQ(kind_of("X c1 R+ -a +a -b +b\n"), ParseErrorKind::BadPortPattern);
  EXPECT_EQ(kind_of("X c1 R+ -a -b +b +a\nX c1 R+ -c -d +d +c\n"), ParseErrorKind::DuplicateCrossing);
  EXPECT_EQ(kind_of("X c1 V -a -b +a +b\n"), ParseErrorKind::Genus);
  EXPECT_EQ(kind_of("theory classical\nX c1 S -a -b +b +a\n"), ParseErrorKind::TheoryMismatch);
  EXPECT_EQ(kind_of("X c1 R+ -a -b\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(kind_of("theory nowhere\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(kind_of("loops x\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(kind_of("X c1 R+ a -b +b +a\n"), ParseErrorKind::Syntax);
}

TEST(Codec, SyntaxOnlyParseKeepsInvalidDiagrams) {
  const Diagram d = parse_diagram_syntax("X c1 R+ -a +a -b +b\n");
  EXPECT_EQ(d.crossings.size(), 1u);
  EXPECT_FALSE(validate(d).valid());
}

TEST(Codec, ErrorsAreLocated) {
  const ParseError e = error_of([] { parse_diagram("X c1 R+ -a -b +b +a\n\nX c2 Q -c -d +d +c\n"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 6u);
  EXPECT_EQ(std::string(e.what()).rfind("line 3, column 6: ", 0), 0u) << e.what();

  // An invariant violation points at the crossing that breaks it.
  const ParseError p = error_of([] { parse_diagram("X c1 R+ -a -b +b +a\nX c2 R+ -c +c -d +d\n"); });
  EXPECT_EQ(p.kind(), ParseErrorKind::BadPortPattern);
  EXPECT_EQ(p.line(), 2u);
}

TEST(Codec, ErrorKindNames) {
  EXPECT_EQ(parse_error_kind_name(ParseErrorKind::DanglingArc), "dangling-arc");
  EXPECT_EQ(parse_error_kind_name(ParseErrorKind::Genus), "genus");
  EXPECT_EQ(parse_error_kind_name(ParseErrorKind::BadEdgeType), "bad-edge-type");
}

TEST(Codec, Braids) {
  const BraidWord w = parse_braid("braid n=4 : a1 A2 v3\n  f1 s2 # comment\n");
  EXPECT_EQ(w.strands, 4u);
  ASSERT_EQ(w.letters.size(), 5u);
  EXPECT_EQ(w.letters[1], (BraidLetter{CrossingType::RealNeg, 2}));
  EXPECT_EQ(w.letters[3], (BraidLetter{CrossingType::Flat, 1}));
  EXPECT_EQ(serialize_braid(w), "braid n=4 : a1 A2 v3 f1 s2\n");
  EXPECT_EQ(parse_braid(serialize_braid(w)), w);
  EXPECT_EQ(parse_braid("braid n=2: a1").letters.size(), 1u);
  EXPECT_EQ(serialize_braid(parse_braid("braid n=1 :")), "braid n=1 :\n");
}

TEST(Codec, BraidErrors) {
  auto kind = [](std::string_view text) {
    return error_of([&] { parse_braid(text); }).kind();
  };
  EXPECT_EQ(kind("a1 a2"), ParseErrorKind::MissingHeader);
  EXPECT_EQ(kind(""), ParseErrorKind::MissingHeader);
  EXPECT_EQ(kind("braid a1"), ParseErrorKind::MissingHeader);
  EXPECT_EQ(kind("braid n=2 a1"), ParseErrorKind::MissingHeader);
  EXPECT_EQ(kind("braid n=2 : a2"), ParseErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind("braid n=2 : x1"), ParseErrorKind::Syntax);
  EXPECT_EQ(kind("braid n=0 :"), ParseErrorKind::Syntax);
  const ParseError e = error_of([] { parse_braid("braid n=2 : a1 a3"); });
  EXPECT_EQ(e.column(), 16u);
}

TEST(Codec, Graphs) {
  const LabeledMultigraph g = parse_graph("vertex z\nedge a b R+\nedge b c V\nedge a b plain\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(1).id, "e2");
  EXPECT_EQ(g.edge(1).label, EdgeLabel::Virtual);
  EXPECT_EQ(g.edge(2).label, EdgeLabel::Plain);
  const std::string text = serialize_graph(g);
  EXPECT_EQ(text, "vertex z\nedge a b R+\nedge b c V\nedge a b plain\n");
  EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  EXPECT_EQ(serialize_graph(g, true), "vertex z\nedge a b R+  # e1\nedge b c V  # e2\nedge a b plain  # e3\n");
}

TEST(Codec, GraphErrors) {
  EXPECT_EQ(error_of([] { parse_graph("edge a a R+\n"); }).kind(), ParseErrorKind::SelfLoop);
  EXPECT_EQ(error_of([] { parse_graph("edge a b Q\n"); }).kind(), ParseErrorKind::BadEdgeType);
  EXPECT_EQ(error_of([] { parse_graph("edge a b\n"); }).kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(std::string(error_of([] { parse_graph("edge a b R+\nedge c c V\n"); }).what()),
            "line 2, column 8: self-loop not allowed in input");

  LabeledMultigraph loop;
  loop.add_vertex("x");
  loop.add_edge("e1", std::size_t{0}, std::size_t{0}, EdgeLabel::Virtual);
  EXPECT_THROW(serialize_graph(loop), std::invalid_argument);
}

TEST(Codec, DetectsTextKind) {
  EXPECT_EQ(detect_text_kind("# hi\nbraid n=2 : a1\n"), TextKind::Braid);
  EXPECT_EQ(detect_text_kind("edge a b V\n"), TextKind::Graph);
  EXPECT_EQ(detect_text_kind("vertex a\n"), TextKind::Graph);
  EXPECT_EQ(detect_text_kind("X c1 R+ -a -b +b +a\n"), TextKind::Diagram);
  EXPECT_EQ(detect_text_kind(""), TextKind::Diagram);
}
