#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "catalog.hpp"
#include "genknot/codec.hpp"
#include "genknot/seifert.hpp"
#include "records.hpp"
#include "sweep.hpp"

namespace genknot::cli {
namespace {

// Raised for anything that maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  TextKind kind = TextKind::Diagram;
  std::string text;
};

Input read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot read " + path);
    buf << file.rdbuf();
  }
  Input input;
  input.text = buf.str();
  input.kind = detect_text_kind(input.text);
  return input;
}

// Diagram from diagram or braid text; graphs are rejected. Text that reads
// but breaks a diagram invariant surfaces as InvalidDiagram (exit 1), not as
// a parse error.
Diagram load_diagram(const Input& input, bool validated = true) {
  switch (input.kind) {
    case TextKind::Graph: throw InputError("expected a diagram or a braid word, got a graph");
    case TextKind::Braid: return closure(parse_braid(input.text));
    case TextKind::Diagram: break;
  }
  Diagram d = parse_diagram_syntax(input.text);
  if (validated) require_valid(d);
  return d;
}

CrossingTypeSet parse_type_list(const std::string& text) {
  CrossingTypeSet s;
  if (text.empty() || text == "none") return s;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto t = parse_crossing_token(token);
    if (!t) throw InputError("bad crossing type '" + token + "'");
    s.insert(*t);
  }
  return s;
}

TheoryFamily resolve_theory(const std::string& name, const Diagram& d) {
  if (name.empty()) return d.theory ? theory_family(*d.theory) : default_theory(d);
  const auto t = parse_theory_name(name);
  if (!t) throw InputError("unknown theory " + name);
  return theory_family(*t);
}

TypeFilter resolve_filter(const std::string& text) {
  try {
    return TypeFilter::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

struct Options {
  std::string format = "human";
  std::string path;
  std::string theory;
  std::string filter;
  std::string gr;
  bool gr_set = false;
  std::string gamma_out;
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_n = 6;
  std::size_t max_len = 12;
  std::string types = "R+,R-,V,F,S";
  std::string repro_dir;
  std::string entry;
  bool check = false;
  bool records = false;
};

class Commands {
 public:
  Commands(const Options& o, std::istream& in, std::ostream& out)
      : o_(o), in_(in), out_(out), format_(o.format == "records" ? Format::Records : Format::Human) {}

  int validate_cmd() {
    const Input input = read_input(o_.path, in_);
    if (input.kind == TextKind::Graph) {
      graph_records(parse_graph(input.text)).render(out_, format_);
      return kOk;
    }
    const Diagram d = load_diagram(input, false);
    const ValidationReport report = validate(d);
    validation_records(d, report).render(out_, format_);
    return report.valid() ? kOk : kSemantic;
  }

  int seifert_cmd() {
    const Diagram d = load_diagram(read_input(o_.path, in_));
    seifert_records(d).render(out_, format_);
    const std::string gamma = serialize_graph(seifert_graph(d), true);
    if (!o_.gamma_out.empty()) {
      std::ofstream file(o_.gamma_out);
      if (!(file << gamma)) throw InputError("cannot write " + o_.gamma_out);
    }
    if (format_ == Format::Human) out_ << "\n# Seifert graph\n" << gamma;
    return kOk;
  }

  int ind_cmd() {
    const Input input = read_input(o_.path, in_);
    const LabeledMultigraph g =
        input.kind == TextKind::Graph ? parse_graph(input.text) : seifert_graph(load_diagram(input));
    const IndSummary s = ind_records(g, resolve_filter(o_.filter.empty() ? "all" : o_.filter));
    s.records.render(out_, format_);
    return s.additivity_checked && !s.additive ? kSemantic : kOk;
  }

  int bounds_cmd() {
    const Diagram d = load_diagram(read_input(o_.path, in_));
    TheoryFamily theory = resolve_theory(o_.theory, d);
    if (o_.gr_set) {
      try {
        theory = with_gr_compatible(theory, parse_type_list(o_.gr));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    const TypeFilter filter = o_.filter.empty() ? TypeFilter::of(theory.gr_compatible) : resolve_filter(o_.filter);

    Records r;
    r.add("theory", std::string(theory.name));
    const BoundReport bound = crossing_bound(d, filter);
    r.append(bound_records(bound, ""));
    bool refused = false;
    try {
      const GbUpperBound gb = gb_upper_bound(d, filter, theory);
      r.add("gb.upper_bound", gb.value);
      for (std::size_t i = 0; i < gb.certificate.size(); ++i) {
        r.add("gb.certificate." + std::to_string(i + 1), gb.certificate[i].edge + "@" + gb.certificate[i].vertex);
      }
    } catch (const std::invalid_argument& e) {
      refused = true;
      r.add("gb.error", e.what());
    }
    const BoundReport chain = braid_index_report(d, theory);
    r.append(bound_records(chain, "chain."));
    r.render(out_, format_);

    if (bound.any_violated() || chain.any_violated()) return kSemantic;
    if (refused || bound.any_precondition_failed() || chain.any_precondition_failed()) return kPrecondition;
    return kOk;
  }

  int sweep_cmd() {
    SweepOptions s;
    s.seed = o_.seed;
    s.count = o_.count;
    s.generator.max_strands = o_.max_n;
    s.generator.max_length = o_.max_len;
    s.generator.types = parse_type_list(o_.types);
    if (s.generator.types.empty()) throw InputError("--types must name at least one crossing type");
    if (s.generator.max_strands < 1) throw InputError("--max-n must be at least 1");
    if (!o_.theory.empty()) s.theory = resolve_theory(o_.theory, Diagram{});
    if (!o_.repro_dir.empty()) s.repro_dir = o_.repro_dir;
    const SweepSummary summary = run_sweep(s);

    Records r;
    r.add("seed", std::to_string(s.seed));
    r.add("words", summary.words);
    for (const auto& [k, n] : summary.checks) r.add("checked." + k, n);
    for (const auto& [k, n] : summary.skipped) r.add("skipped." + k, n);
    if (s.generator.types.subset_of(CrossingTypeSet{CrossingType::Flat}) || (s.theory && s.theory->gr_compatible.empty())) {
      r.add("note", "no GR-compatible crossing types; braid index checks skipped");
    }
    r.add("violations", summary.violations.size());
    for (const SweepViolation& v : summary.violations) {
      std::string word = v.word;
      if (!word.empty() && word.back() == '\n') word.pop_back();
      r.add("violation." + std::to_string(v.index), v.check + " " + word +
                                                      (v.reproducer ? " -> " + v.reproducer->string() : ""));
    }
    r.render(out_, format_);
    return summary.violations.empty() ? kOk : kSemantic;
  }

  int catalog_cmd() {
    if (o_.check) {
      Records r;
      bool ok = true;
      for (const CatalogEntry& e : catalog()) {
        const auto bad = catalog_mismatches(e);
        ok = ok && bad.empty();
        r.add(std::string(e.name), bad.empty() ? std::string("ok") : "mismatch: " + join(bad, "; "));
      }
      r.render(out_, format_);
      return ok ? kOk : kSemantic;
    }
    if (o_.entry.empty()) {
      Records r;
      for (const CatalogEntry& e : catalog()) r.add(std::string(e.name), std::string(e.description));
      r.render(out_, format_);
      return kOk;
    }
    const CatalogEntry* e = find_catalog_entry(o_.entry);
    if (!e) throw InputError("no catalog entry " + o_.entry);
    if (!o_.records) {
      out_ << e->text;
      return kOk;
    }
    Records expected;
    for (const auto& [k, v] : e->expected) expected.add("expected." + std::string(k), std::string(v));
    expected.render(out_, format_);
    catalog_records(*e).render(out_, format_);
    return kOk;
  }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  Format format_;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Seifert graphs, graph index and braid-index bounds for generalized link diagrams", "genknot"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output style")->check(CLI::IsMember({"human", "records"}));

  auto* validate = app.add_subcommand("validate", "Check a diagram, braid or graph file");
  validate->add_option("path", o.path, "Input file, - for stdin")->required();

  auto* seifert = app.add_subcommand("seifert", "Seifert circles and Seifert graph");
  seifert->add_option("path", o.path, "Diagram or braid file, - for stdin")->required();
  seifert->add_option("--gamma-out", o.gamma_out, "Also write the Seifert graph in graph format");

  auto* index = app.add_subcommand("ind", "Graph index with certificate and block breakdown");
  index->add_option("path", o.path, "Graph, diagram or braid file, - for stdin")->required();
  index->add_option("--filter", o.filter, "all|0|+|-|0-|+- or a list such as R+,V");

  auto* bounds = app.add_subcommand("bounds", "Crossing and braid-index bounds");
  bounds->add_option("path", o.path, "Diagram or braid file, - for stdin")->required();
  bounds->add_option("--theory", o.theory, "Theory name; default: the file's theory line or the smallest fitting one");
  bounds->add_option("--filter", o.filter, "Index filter; default: the theory's GR-compatible types");
  bounds->add_option("--gr", o.gr, "Override the GR-compatible types, e.g. V or R+,R- (none for empty)")
      ->each([&](const std::string&) { o.gr_set = true; });

  auto* sweep = app.add_subcommand("sweep", "Random braid closures through every property check");
  sweep->add_option("--seed", o.seed, "Generator seed");
  sweep->add_option("--count", o.count, "Number of words");
  sweep->add_option("--max-n", o.max_n, "Largest strand count");
  sweep->add_option("--max-len", o.max_len, "Longest word");
  sweep->add_option("--types", o.types, "Letter types, comma separated (R+,R-,V,F,S)");
  sweep->add_option("--theory", o.theory, "Theory for the braid index chain; default per diagram");
  sweep->add_option("--repro-dir", o.repro_dir, "Directory for reproducer files");

  auto* cat = app.add_subcommand("catalog", "Built-in examples with their expected records");
  cat->add_option("name", o.entry, "Entry to print");
  cat->add_flag("--check", o.check, "Recompute every entry and compare with its expected records");
  cat->add_flag("--records", o.records, "Print expected and computed records of the named entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInput;
  }

  Commands cmd(o, in, out);
  try {
    if (validate->parsed()) return cmd.validate_cmd();
    if (seifert->parsed()) return cmd.seifert_cmd();
    if (index->parsed()) return cmd.ind_cmd();
    if (bounds->parsed()) return cmd.bounds_cmd();
    if (sweep->parsed()) return cmd.sweep_cmd();
    if (cat->parsed()) return cmd.catalog_cmd();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const InvalidDiagram& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  }
  return kInput;
}

}  // namespace genknot::cli
