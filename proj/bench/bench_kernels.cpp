// Compares the serial reference scan against the table-driven OpenMP kernel
// on fiber-measure workloads of increasing size.

#include <benchmark/benchmark.h>

#include "wordmaps/wordmap.hpp"

using namespace wordmaps;

namespace {

const Word& commutator_word() {
  static const Word w = parse_word("aabAB", 2);
  return w;
}

EvalOptions big_budget(int jobs = 0) {
  EvalOptions opts;
  opts.max_tuples = 2'000'000'000ull;
  opts.jobs = jobs;
  return opts;
}

void BM_measure_serial(benchmark::State& state) {
  const FiniteGroup G = make_symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_serial(commutator_word(), G, big_budget()));
  }
}

void BM_measure_tables_1job(benchmark::State& state) {
  const FiniteGroup G = make_symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure(commutator_word(), G, big_budget(1)));
  }
}

void BM_measure_tables_parallel(benchmark::State& state) {
  const FiniteGroup G = make_symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure(commutator_word(), G, big_budget()));
  }
}

void BM_image_full_early_exit(benchmark::State& state) {
  const FiniteGroup G = make_symmetric(static_cast<int>(state.range(0)));
  const Word w = parse_word("a", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(image(w, G, big_budget()));
  }
}

void BM_hom_enumeration(benchmark::State& state) {
  const FiniteGroup G = make_symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_endomorphisms(G));
  }
}

}  // namespace

BENCHMARK(BM_measure_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_measure_tables_1job)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_measure_tables_parallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_image_full_early_exit)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hom_enumeration)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
