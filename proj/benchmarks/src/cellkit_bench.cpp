#include <benchmark/benchmark.h>

#include "cellkit/context.hpp"
#include "cellkit/homology.hpp"
#include "cellkit/kostant.hpp"

using namespace cellkit;

namespace {

CartanType type_of(int64_t code) { return static_cast<CartanType>(code); }

void BM_KLTable(benchmark::State& state) {
  auto W = CoxeterSystem::create(type_of(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    KLTable table(W);
    table.precompute_all();
    benchmark::DoNotOptimize(&table);
  }
  state.SetLabel(W->name());
}

void BM_ProductSweep(benchmark::State& state) {
  auto W = CoxeterSystem::create(type_of(state.range(0)), static_cast<int>(state.range(1)));
  KLTable table(W);
  table.precompute_all();
  ProductEngine engine(table);
  for (auto _ : state) {
    SweepResult sweep = run_sweep(engine);
    benchmark::DoNotOptimize(&sweep);
  }
  state.SetLabel(W->name());
}

void BM_CellsAndKostant(benchmark::State& state) {
  const auto t = type_of(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Context ctx(t, r);
    KostantReport report = cell_report(ctx);
    benchmark::DoNotOptimize(report.elements.data());
  }
  state.SetLabel(CoxeterSystem::create(t, r)->name());
}

void BM_TranslatedCharacter(benchmark::State& state) {
  Context ctx(CartanType::B, 3);
  const ElementId x = ctx.system().parse_id("2312312"), y = ctx.system().parse_id("231232");
  ctx.sweep();
  for (auto _ : state) benchmark::DoNotOptimize(translated_simple_char(ctx, x, y));
}

void BM_AFunction(benchmark::State& state) {
  auto W = CoxeterSystem::create(CartanType::D, 4);
  KLTable table(W);
  table.precompute_all();
  ProductEngine engine(table);
  const bool fast = state.range(0) != 0;
  Context ctx(W);
  const CellDecomposition& cells = ctx.cells();
  for (auto _ : state) {
    if (fast) {
      benchmark::DoNotOptimize(a_values_fast(engine, cells));
    } else {
      benchmark::DoNotOptimize(a_values_full(engine));
    }
  }
  state.SetLabel(fast ? "fast" : "full");
}

#define CELLKIT_GROUPS                                                       \
  Args({static_cast<int64_t>(CartanType::B), 3})                             \
      ->Args({static_cast<int64_t>(CartanType::D), 4})                       \
      ->Args({static_cast<int64_t>(CartanType::A), 4})

}  // namespace

BENCHMARK(BM_KLTable)->CELLKIT_GROUPS->Args({static_cast<int64_t>(CartanType::A), 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductSweep)->CELLKIT_GROUPS->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellsAndKostant)->CELLKIT_GROUPS->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TranslatedCharacter)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AFunction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
