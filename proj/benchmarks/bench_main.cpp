#include <benchmark/benchmark.h>

#include "qseries/arith.hpp"
#include "qseries/constants.hpp"
#include "qseries/hunt.hpp"
#include "qseries/partition.hpp"
#include "qseries/pslq.hpp"
#include "qseries/series.hpp"
#include "qseries/verify.hpp"

using namespace qseries;

static void BM_Lambert(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lambert(3, Rational(1, 5), ctx));
}
BENCHMARK(BM_Lambert)->Arg(100)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

static void BM_Eisenstein(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eisenstein(12, Rational(1, 5), EisensteinConvention::pi_scale, ctx));
  }
}
BENCHMARK(BM_Eisenstein)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_EulerF10(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(euler_F(Rational(10), ctx));
}
BENCHMARK(BM_EulerF10)->Arg(100)->Arg(2850)->Unit(benchmark::kMillisecond);

static void BM_Constant(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(1)));
  const auto c = static_cast<NamedConstant>(state.range(0));
  state.SetLabel(std::string(constant_name(c)));
  for (auto _ : state) benchmark::DoNotOptimize(constant(c, ctx));
}
BENCHMARK(BM_Constant)
    ->ArgsProduct({{static_cast<long>(NamedConstant::gamma_quarter), static_cast<long>(NamedConstant::zeta7),
                    static_cast<long>(NamedConstant::catalan)},
                   {100, 1000}})
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  const PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(builtin_registry(), {}, ctx));
}
BENCHMARK(BM_VerifyAll)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_PartitionsByExpansion(benchmark::State& state) {
  const PrecisionContext ctx = make_context(2850);
  for (auto _ : state) benchmark::DoNotOptimize(partitions_by_expansion(205, ctx));
}
BENCHMARK(BM_PartitionsByExpansion)->Unit(benchmark::kMillisecond);

static void BM_PartitionOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partition_oracle(state.range(0)));
}
BENCHMARK(BM_PartitionOracle)->Arg(205)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_Hunt(benchmark::State& state) {
  const PrecisionContext ctx = make_context(100);
  for (auto _ : state) benchmark::DoNotOptimize(hunt_near_integers(-3, state.range(0), 12, ctx));
}
BENCHMARK(BM_Hunt)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_Rediscover(benchmark::State& state) {
  const PrecisionContext ctx = make_context(120);
  for (auto _ : state) benchmark::DoNotOptimize(rediscover(builtin_registry(), "1.8", ctx));
}
BENCHMARK(BM_Rediscover)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
