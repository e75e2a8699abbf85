#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "genknot/braid.hpp"
#include "genknot/codec.hpp"
#include "genknot/index.hpp"
#include "genknot/planarity.hpp"
#include "genknot/seifert.hpp"

namespace {

using namespace genknot;

// Triangulated k x k grid; planar.
LabeledMultigraph grid(int k) {
  LabeledMultigraph g;
  auto id = [](int r, int c) { return std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) g.add_vertex(id(r, c));
  }
  auto edge = [&](int r1, int c1, int r2, int c2) {
    g.add_edge("e" + std::to_string(g.edge_count()), id(r1, c1), id(r2, c2), EdgeLabel::Plain);
  };
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      if (c + 1 < k) edge(r, c, r, c + 1);
      if (r + 1 < k) edge(r, c, r + 1, c);
      if (r + 1 < k && c + 1 < k) edge(r, c, r + 1, c + 1);
    }
  }
  return g;
}

LabeledMultigraph random_graph(std::size_t n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  LabeledMultigraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge("e" + std::to_string(g.edge_count()), u, v, EdgeLabel::Plain);
    }
  }
  return g;
}

void BM_PlanarGrid(benchmark::State& state) {
  const LabeledMultigraph g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g).planar);
  state.SetLabel(std::to_string(g.vertex_count()) + " vertices");
}
BENCHMARK(BM_PlanarGrid)->Arg(4)->Arg(8)->Arg(16);

void BM_NonplanarRandom64(benchmark::State& state) {
  const LabeledMultigraph g = random_graph(64, 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g).planar);
}
BENCHMARK(BM_NonplanarRandom64);

// Two 10-edge cycles glued at a vertex plus chords: about 20 edges.
void BM_IndGluedCycles(benchmark::State& state) {
  std::string text;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 10; ++i) {
      const std::string a = i == 0 ? "hub" : "c" + std::to_string(c) + "_" + std::to_string(i);
      const std::string b = i == 9 ? "hub" : "c" + std::to_string(c) + "_" + std::to_string(i + 1);
      text += "edge " + a + " " + b + (i % 2 ? " V\n" : " R+\n");
    }
  }
  const LabeledMultigraph g = parse_graph(text);
  for (auto _ : state) benchmark::DoNotOptimize(ind(g, TypeFilter::all()).value);
}
BENCHMARK(BM_IndGluedCycles);

void BM_ClosureSeifertGraph(benchmark::State& state) {
  std::mt19937_64 rng(11);
  WordGeneratorOptions o;
  o.min_strands = 6;
  o.max_strands = 6;
  o.max_length = static_cast<std::size_t>(state.range(0));
  const BraidWord w = random_word(rng, o);
  for (auto _ : state) benchmark::DoNotOptimize(seifert_graph(closure(w)).edge_count());
}
BENCHMARK(BM_ClosureSeifertGraph)->Arg(12)->Arg(200);

void BM_NugatorySet(benchmark::State& state) {
  const Diagram d = closure(parse_braid("braid n=4 : a1 a1 v2 v2 s3 s3 a1 A2 v3 f1 f2 a3"));
  for (auto _ : state) benchmark::DoNotOptimize(nugatory_set(d).size());
}
BENCHMARK(BM_NugatorySet);

}  // namespace

BENCHMARK_MAIN();
