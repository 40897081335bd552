// Serial reference against the OpenMP paths for the two data-parallel kernels.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "hvcert/certify.hpp"
#include "hvcert/sphere.hpp"

using namespace hvcert;

namespace {

certify::ScanGrid grid_for(benchmark::State& state) {
  return {3, 8, 0, static_cast<long>(state.range(0))};
}

void BM_ScanSerial(benchmark::State& state) {
  const auto g = grid_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(certify::scan_serial(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(certify::scan_cells(g).size()));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto g = grid_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(certify::scan_parallel(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(certify::scan_cells(g).size()));
}

void qbc(benchmark::State& state, sphere::Execution how) {
  const sphere::BTensor b({{1.0, {2, 0}}, {0.5, {3, 1}}, {-0.25, {5, -2}}});
  const auto grid = sphere::SphereGrid::for_degree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sphere::qbc_quadrature(b, grid, how));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

void BM_QbcSerial(benchmark::State& state) { qbc(state, sphere::Execution::serial); }
void BM_QbcParallel(benchmark::State& state) { qbc(state, sphere::Execution::parallel); }

void annulus(benchmark::State& state, sphere::Execution how) {
  const auto b = sphere::b_tensor({2, 0});
  const auto grid = sphere::SphereGrid::for_degree(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sphere::annulus_curvature_check(b, 2, 1e-3, {}, grid, how));
}

void BM_AnnulusSerial(benchmark::State& state) { annulus(state, sphere::Execution::serial); }
void BM_AnnulusParallel(benchmark::State& state) { annulus(state, sphere::Execution::parallel); }

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QbcSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QbcParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AnnulusSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnnulusParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();

int main(int argc, char** argv) {
  benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
