#include <benchmark/benchmark.h>

#include "monotrick/search.hpp"
#include "monotrick/syntax.hpp"

using namespace monotrick;

namespace {

// Unsatisfiable, so every candidate is visited.
const Formula kUnsat = parse("exists x (Q(x) & <>~Q(x)) & forall x (Q(x) -> []Q(x))");

// state.range(0) is the worker count; 1 selects the serial reference loop.
void BM_SatBounded(benchmark::State& state) {
  const SearchOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    const Verdict v = sat_bounded(kUnsat, {}, 3, 2, Mode::modal, EqPrinciple::eq1, false, opts);
    benchmark::DoNotOptimize(v.outcome);
  }
}
BENCHMARK(BM_SatBounded)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

// Valid, so the whole space is checked.
void BM_DecideFork(benchmark::State& state) {
  Frame fork = Frame::canonical(3);
  fork.connect(0, 1);
  fork.connect(0, 2);
  const Formula f = parse("Q(x) & <>(x = y) -> <>(x = y) & Q(x)");
  const SearchOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    const Verdict v = decide_valid_over_frame(fork, f, 3, Mode::modal, EqPrinciple::eq1, false, opts);
    benchmark::DoNotOptimize(v.outcome);
  }
}
BENCHMARK(BM_DecideFork)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
