#include <benchmark/benchmark.h>

#include <vector>

#include "toric/action.hpp"
#include "toric/coefficients.hpp"
#include "toric/oracles.hpp"
#include "toric/separation.hpp"
#include "toric/verdict.hpp"

namespace {

using namespace toric;

SeparatedSystem frozen_hill() {
  SystemParams p;
  p.g = 1;
  p.f = 2;
  return separate(build_system(SystemKind::FrozenHill, p), p.f);
}

void BM_CkTable(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ck_table(n));
}
BENCHMARK(BM_CkTable)->Arg(5)->Arg(20)->Arg(64);

void BM_IdentityCheck(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poly_identity_check(n));
}
BENCHMARK(BM_IdentityCheck)->Arg(2)->Arg(8);

void BM_Action(benchmark::State& state) {
  const auto sys = frozen_hill();
  const HalfSystem h(sys.kappa, sys.v1);
  const double a = 0.9 * h.a_max;
  for (auto _ : state) benchmark::DoNotOptimize(action(h, a));
}
BENCHMARK(BM_Action);

void BM_MomentCurve(benchmark::State& state) {
  const auto sys = frozen_hill();
  CurveOptions opts;
  opts.n_samples = 65;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moment_curve(sys, opts));
}
BENCHMARK(BM_MomentCurve)->Arg(1)->Arg(4)->UseRealTime();

void BM_McArea(benchmark::State& state) {
  const auto sys = frozen_hill();
  const HalfSystem h(sys.kappa, sys.v1);
  for (auto _ : state) benchmark::DoNotOptimize(mc_area(h, 0.5, 1'000'000, 42, 1));
}
BENCHMARK(BM_McArea)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
