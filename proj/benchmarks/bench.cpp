#include <benchmark/benchmark.h>

#include "lpcoh/strip.hpp"
#include "lpcoh/tables.hpp"

using namespace lpcoh;

namespace {

void BM_BuildE8(benchmark::State& state) {
  RootSystemType t(RootFamily::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(t));
}
BENCHMARK(BM_BuildE8);

void BM_BuildClassical(benchmark::State& state) {
  RootSystemType t(RootFamily::C, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildClassical)->Arg(8)->Arg(20)->Arg(50)->Complexity();

void BM_StripReport(benchmark::State& state) {
  RealFormSpec g{Family::SL_R, static_cast<int>(state.range(0)), 0, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(strip_report(g));
}
BENCHMARK(BM_StripReport)->Arg(10)->Arg(25);

void BM_ScanE7(benchmark::State& state) {
  RealFormSpec g{Family::E7_Split, 0, 0, std::nullopt};
  StripReport report = strip_report(g);
  Rational p(7, 3);
  for (auto _ : state) {
    for (long long k = 0; k <= report.D; ++k)
      benchmark::DoNotOptimize(group_status(report, p, k));
  }
}
BENCHMARK(BM_ScanE7);

void BM_RenderTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(render_paper_tables(TableFormat::Csv));
}
BENCHMARK(BM_RenderTables);

}  // namespace

BENCHMARK_MAIN();
