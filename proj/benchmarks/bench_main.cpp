#include <benchmark/benchmark.h>

#include "hms/arith.hpp"
#include "hms/gl2.hpp"
#include "hms/hj.hpp"
#include "hms/modcurve.hpp"
#include "hms/surface.hpp"

#include <numeric>

using namespace hms;

static void BM_HjExpansionSweep(benchmark::State& state) {
  const Int limit = state.range(0);
  for (auto _ : state) {
    Int total = 0;
    for (Int d = 2; d <= limit; ++d)
      for (Int q = 1; q < d; ++q) {
        if (std::gcd(d, q) != 1) continue;
        total += static_cast<Int>(hj_expansion(d, q).size());
      }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HjExpansionSweep)->Arg(100)->Arg(300);

static void BM_ClassNumber(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_number(-4 * n * n));
  }
}
BENCHMARK(BM_ClassNumber)->Arg(17)->Arg(33)->Arg(101);

static void BM_SingularityCensus(benchmark::State& state) {
  const Level lvl = make_level(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(singularity_census(lvl).total());
  }
}
BENCHMARK(BM_SingularityCensus)->Arg(17)->Arg(33);

static void BM_InvariantRow(benchmark::State& state) {
  const Level lvl = make_level(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_row(lvl).kw_sq);
  }
}
BENCHMARK(BM_InvariantRow)->Arg(17)->Arg(23)->Arg(33);

static void BM_FullTable(benchmark::State& state) {
  for (auto _ : state) {
    Int total = 0;
    for (Int n = 6; n <= 33; ++n)
      for (Int r : table_classes(n)) total += invariant_row(make_level(n, r)).kw_sq;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FullTable)->Unit(benchmark::kMillisecond);

static void BM_CosetOracle(benchmark::State& state) {
  const Int n = state.range(0);
  const Mat g = weyl_matrix_odd(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_orbifold(g).index);
  }
}
BENCHMARK(BM_CosetOracle)->Arg(11)->Arg(17)->Arg(21)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
