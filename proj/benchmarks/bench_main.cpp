#include <benchmark/benchmark.h>

#include "cylgame/basis.hpp"
#include "cylgame/builders.hpp"
#include "cylgame/cone_strategy.hpp"
#include "cylgame/ef.hpp"
#include "cylgame/game.hpp"
#include "cylgame/rainbow.hpp"
#include "cylgame/representation.hpp"
#include "cylgame/split.hpp"
#include "cylgame/strategy.hpp"

using namespace cylgame;

static void BM_RepSearch(benchmark::State& st) {
  const auto e2 = maddux_E(2);
  const int b = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(rep_search(e2, b).nodes_visited);
}
BENCHMARK(BM_RepSearch)->Arg(5)->Arg(6);

static void BM_EF(benchmark::State& st) {
  const auto g = complete_graph(static_cast<int>(st.range(0))), h = complete_graph(static_cast<int>(st.range(0)) - 1);
  for (auto _ : st) benchmark::DoNotOptimize(solve_ef(g, h, 5, 5).positions_explored);
}
BENCHMARK(BM_EF)->Arg(4)->Arg(5);

static void BM_BasisSearch(benchmark::State& st) {
  const auto s = maddux_E(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(basis_search(s, 5).candidates);
}
BENCHMARK(BM_BasisSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_RaGame(benchmark::State& st) {
  const auto s = maddux_E(2);
  for (auto _ : st) benchmark::DoNotOptimize(solve_ra_game(s, 5, -1).positions_explored);
}
BENCHMARK(BM_RaGame)->Unit(benchmark::kMillisecond);

static void BM_RainbowBuild(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rainbow_ca(3, 4, 3).size());
}
BENCHMARK(BM_RainbowBuild)->Unit(benchmark::kMillisecond);

static void BM_ConeVerify(benchmark::State& st) {
  const auto a43 = rainbow_ca(3, 4, 3);
  const auto model = make_ca_model(a43, 6, GameVariant::BoldG);
  for (auto _ : st) {
    StrategyCertificate c = unfold_forall(*model, cone_bombardment(a43, 6, {1, 2, 3, 4}), true, 0);
    c.game = GameVariant::BoldG;
    c.winner = Player::Forall;
    c.safety = true;
    benchmark::DoNotOptimize(verify_strategy(GameSpec{GameVariant::BoldG, &a43, nullptr, 6, 0}, c).ok);
  }
}
BENCHMARK(BM_ConeVerify)->Unit(benchmark::kMillisecond);

static void BM_Theta(benchmark::State& st) {
  const auto a43 = rainbow_ca(3, 4, 3);
  const AtomSet reds = red_atoms(a43);
  const CaSplit t = split_atoms(a43, reds, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(theta_embedding(a43, t).report.ok);
}
BENCHMARK(BM_Theta)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
