#include <benchmark/benchmark.h>

#include "pipefit/angles.hpp"
#include "pipefit/asbuilt.hpp"
#include "pipefit/joint.hpp"
#include "pipefit/sizing.hpp"

using namespace pipefit;

static void BM_SolveJoint(benchmark::State& state) {
  const auto vf = ideal_vertex_figure(SolidKind::Dodecahedron);
  const auto cat = standard_catalog();
  const auto& wye = cat.hub("true-wye");
  for (auto _ : state) benchmark::DoNotOptimize(choose_elbow(vf, wye, cat));
}
BENCHMARK(BM_SolveJoint);

static void BM_Metrics(benchmark::State& state) {
  const auto kind = kAllSolids[static_cast<std::size_t>(state.range(0))];
  const auto& p = platonic_solid(kind);
  for (auto _ : state) benchmark::DoNotOptimize(polyhedron_metrics(p));
}
BENCHMARK(BM_Metrics)->DenseRange(0, 4);

static void BM_AssembleAsBuilt(benchmark::State& state) {
  const auto cat = standard_catalog();
  const auto& wye = cat.hub("true-wye");
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_asbuilt(SolidKind::Dodecahedron, wye, deg_to_rad(22.5), 1.0));
}
BENCHMARK(BM_AssembleAsBuilt);

static void BM_Compensate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double angle = kPi * (n - 2) / n + deg_to_rad(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(compensate(n, 1.0, angle, 1e-3));
}
BENCHMARK(BM_Compensate)->Arg(3)->Arg(5)->Arg(12);

BENCHMARK_MAIN();
