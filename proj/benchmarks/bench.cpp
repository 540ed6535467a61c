#include <benchmark/benchmark.h>

#include "reebkit/coupling.hpp"
#include "reebkit/generators.hpp"
#include "reebkit/homotopy.hpp"
#include "reebkit/metrics.hpp"
#include "reebkit/reeb.hpp"
#include "reebkit/zigzag.hpp"

using namespace reebkit;

static void BM_CylinderReeb(benchmark::State& state) {
  auto c = cylinder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_reeb(c.complex, c.f).graph);
}
BENCHMARK(BM_CylinderReeb)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_RandomReeb(benchmark::State& state) {
  auto in = random_instance({7, static_cast<int>(state.range(0)), 6, 4});
  for (auto _ : state) benchmark::DoNotOptimize(compute_reeb(in.complex, in.f).graph);
}
BENCHMARK(BM_RandomReeb)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_PairwiseD(benchmark::State& state) {
  auto g = polygon_graph(static_cast<int>(state.range(0)));
  std::vector<GraphPoint> pts;
  for (int i = 0; i < g.node_count(); ++i) pts.push_back({Cell::node(i), g.value(i)});
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_d(g, pts));
}
BENCHMARK(BM_PairwiseD)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_CylinderCoupling(benchmark::State& state) {
  auto c = cylinder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coupling_bound(reeb_coupling(c.complex, c.f, *c.g)));
}
BENCHMARK(BM_CylinderCoupling)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_CylinderDistortion(benchmark::State& state) {
  auto maps = cylinder_distortion_maps(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distortion(maps.first, maps.second, 1, false).distortion);
}
BENCHMARK(BM_CylinderDistortion)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_HomotopyZigzag(benchmark::State& state) {
  auto in = random_instance({11, static_cast<int>(state.range(0)), 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(build_homotopy_zigzag(in.complex, in.f, *in.g).cost);
}
BENCHMARK(BM_HomotopyZigzag)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ZigzagCost(benchmark::State& state) {
  auto in = random_instance({11, 6, 3, 2});
  auto z = build_homotopy_zigzag(in.complex, in.f, *in.g);
  const bool sweep = state.range(0) == 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep ? zigzag_cost(z.diagram).cost : zigzag_cost_exhaustive(z.diagram).cost);
  state.SetLabel(sweep ? "sweep" : "exhaustive");
}
BENCHMARK(BM_ZigzagCost)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
