#include <benchmark/benchmark.h>

#include <polypell/congruence.hpp>
#include <polypell/gonal.hpp>
#include <polypell/pell.hpp>
#include <polypell/simultaneous.hpp>

namespace {

using polypell::Int;

void BM_fundamental_solution(benchmark::State& state) {
  const Int m = state.range(0);
  for (auto _ : state) {
    auto g = polypell::fundamental_solution(m);
    benchmark::DoNotOptimize(g.x);
  }
}
BENCHMARK(BM_fundamental_solution)->Arg(13)->Arg(61)->Arg(94)->Arg(4729494);

void BM_pell_power(benchmark::State& state) {
  const auto g = polypell::fundamental_solution(2);
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    auto s = polypell::power(g, n);
    benchmark::DoNotOptimize(s.x);
  }
}
BENCHMARK(BM_pell_power)->RangeMultiplier(4)->Range(16, 4096);

void BM_group_info(benchmark::State& state) {
  for (auto _ : state) {
    auto info = polypell::group_info(2, state.range(0));
    benchmark::DoNotOptimize(info.order);
  }
}
BENCHMARK(BM_group_info)->Arg(6)->Arg(60)->Arg(600);

void BM_multiples_oracle(benchmark::State& state) {
  const auto r_max = Int(static_cast<unsigned long>(state.range(0)));
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto hits = polypell::enumerate_multiples_oracle(6, 2, r_max, jobs);
    benchmark::DoNotOptimize(hits.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_multiples_oracle)
    ->ArgsProduct({{10'000, 100'000, 1'000'000}, {1, 2}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_theorem_pairs(benchmark::State& state) {
  for (auto _ : state) {
    auto pairs = polypell::solve_multiple(5, 2, static_cast<std::size_t>(state.range(0)),
                                          polypell::solve_mode::theorem, 512);
    benchmark::DoNotOptimize(pairs.size());
  }
}
BENCHMARK(BM_theorem_pairs)->Arg(4)->Arg(16)->Arg(64);

void BM_constrained_points(benchmark::State& state) {
  const auto spec = polypell::curve_params(5, 6, 3);
  const auto v_bound = Int(static_cast<unsigned long>(state.range(0)));
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto points = polypell::constrained_integer_points(spec, v_bound, jobs);
    benchmark::DoNotOptimize(points.size());
  }
}
BENCHMARK(BM_constrained_points)
    ->ArgsProduct({{10'000, 100'000, 1'000'000}, {1, 2}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
