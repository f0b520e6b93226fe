#include <benchmark/benchmark.h>

#include "rcd/cliquesum.hpp"
#include "rcd/generators.hpp"
#include "rcd/keylemma.hpp"
#include "rcd/permcsp.hpp"
#include "rcd/robustness.hpp"
#include "rcd/treewidth.hpp"

namespace {

using namespace rcd;

void BM_RadialLayering(benchmark::State& state) {
  Embedding emb = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radial_layering(emb));
  state.SetComplexityN(emb.graph().n());
}
BENCHMARK(BM_RadialLayering)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_KeySets(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Embedding emb = grid(m);
  RadialLayering l = radial_layering(emb);
  BoundaryComplex bc = boundary_complex(emb, l, 2);
  VertexSet phi{m + 1};
  for (auto _ : state) benchmark::DoNotOptimize(compute_key_sets(bc, phi));
}
BENCHMARK(BM_KeySets)->RangeMultiplier(2)->Range(8, 64);

void BM_DecomposeGrid(benchmark::State& state) {
  Embedding emb = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_embedded(emb, 3, {}));
  state.SetComplexityN(emb.graph().n());
}
BENCHMARK(BM_DecomposeGrid)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_DecomposeRandomPlanar(benchmark::State& state) {
  Embedding emb = random_planar(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_embedded(emb, 3, {}));
}
BENCHMARK(BM_DecomposeRandomPlanar)->RangeMultiplier(4)->Range(64, 4096);

void BM_DecomposeApexGrid(benchmark::State& state) {
  ApexStructure st = apex_grid(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_apex(st, 3, {}));
}
BENCHMARK(BM_DecomposeApexGrid)->RangeMultiplier(2)->Range(8, 32);

void BM_Combine(benchmark::State& state) {
  CliqueSumOptions opt;
  opt.pieces = static_cast<int>(state.range(0));
  RsInput in = random_clique_sum(5, opt);
  for (auto _ : state) benchmark::DoNotOptimize(combine(in, 2));
}
BENCHMARK(BM_Combine)->DenseRange(2, 8, 2);

void BM_TreewidthUpperBound(benchmark::State& state) {
  Graph g = random_planar(static_cast<int>(state.range(0)), 3).graph();
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_upper_bound(g));
}
BENCHMARK(BM_TreewidthUpperBound)->RangeMultiplier(4)->Range(64, 1024);

void BM_VerifyRcd(benchmark::State& state) {
  Embedding emb = grid(static_cast<int>(state.range(0)));
  Rcd r = decompose_embedded(emb, 2, {});
  RobustnessOptions opt;
  opt.samples = 10;
  opt.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_rcd(emb.graph(), r, opt));
}
BENCHMARK(BM_VerifyRcd)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SolveOct(benchmark::State& state) {
  Embedding emb = grid(static_cast<int>(state.range(0)));
  Encoded enc = encode_oct(emb.graph());
  Rcd r = decompose_embedded(emb, 2, {});
  for (auto _ : state) benchmark::DoNotOptimize(subexp_solve(enc.inst, enc.sc, 2, DeletionMode::Vertex, r));
}
BENCHMARK(BM_SolveOct)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
