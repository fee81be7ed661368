#include <benchmark/benchmark.h>

#include "iewds/constructive.hpp"
#include "iewds/elimination.hpp"
#include "iewds/equilibrium.hpp"
#include "iewds/game_classes.hpp"
#include "iewds/generators.hpp"

using namespace iewds;

namespace {

GameTree zero_sum(std::uint64_t seed) {
  FamilySpec spec;
  spec.mode = PayoffMode::kZeroSum;
  spec.depth = 4;
  spec.branching = 3;
  spec.seed = seed;
  spec.max_joint = 10'000;
  return random_game(spec);
}

void BM_StrategicForm(benchmark::State& state) {
  const auto g = std::make_shared<const GameTree>(zero_sum(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(to_strategic(g));
  state.counters["joints"] = static_cast<double>(to_strategic(g)->joint_count());
}
BENCHMARK(BM_StrategicForm)->Arg(1)->Arg(2)->Arg(3);

void BM_MaxRound(benchmark::State& state) {
  const SubgameView view(to_strategic(centipede(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(max_round(view));
}
BENCHMARK(BM_MaxRound)->DenseRange(2, 5);

void BM_Fixpoint(benchmark::State& state) {
  const SubgameView view(to_strategic(zero_sum(static_cast<std::uint64_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(fixpoint(view));
}
BENCHMARK(BM_Fixpoint)->Arg(1)->Arg(2)->Arg(3);

void BM_SpeInvariance(benchmark::State& state) {
  const auto g = ultimatum(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spe_invariance(g));
}
BENCHMARK(BM_SpeInvariance)->Arg(100)->Arg(1000);

void BM_SolveCentipede(benchmark::State& state) {
  const auto g = std::make_shared<const GameTree>(centipede(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_constructive(g));
}
BENCHMARK(BM_SolveCentipede)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SolveChooser(benchmark::State& state) {
  const auto g = std::make_shared<const GameTree>(chooser_centipede(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_constructive(g));
}
BENCHMARK(BM_SolveChooser)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Tdi(benchmark::State& state) {
  const SubgameView view(to_strategic(zero_sum(static_cast<std::uint64_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(is_tdi(view));
}
BENCHMARK(BM_Tdi)->Arg(1)->Arg(2);

}  // namespace
BENCHMARK_MAIN();
