// Serial vs OpenMP kernels: bounded model search and satisfaction sets.

#include <benchmark/benchmark.h>

#include <random>

#include "u1/eval.hpp"
#include "u1/lab.hpp"
#include "u1/sat.hpp"

using namespace u1;

namespace {

// No model up to the bound, so every size is searched to the end.
const char* kNoSmallModel = "((A x. E y. S(x,y) & E x. A y. ~S(y,x)) & A x. E[<=1] y. S(y,x))";

void BM_FindModelSerial(benchmark::State& state) {
  const Formula f = parse_formula(kNoSmallModel);
  const SearchOptions opts{state.range(1) != 0, 256};
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_model_serial(f, Vocabulary{{"S", 2}}, static_cast<int>(state.range(0)), opts));
  }
}

void BM_FindModelParallel(benchmark::State& state) {
  const Formula f = parse_formula(kNoSmallModel);
  const SearchOptions opts{state.range(1) != 0, 256};
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_model(f, Vocabulary{{"S", 2}}, static_cast<int>(state.range(0)), opts));
  }
}

Structure random_graph(int n) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution edge(0.1);
  std::vector<std::string> domain;
  for (int i = 0; i < n; ++i) domain.push_back("v" + std::to_string(i));
  TupleSet r;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge(rng)) r.insert({i, j});
    }
  }
  return Structure(domain, Vocabulary{{"R", 2}}, std::map<std::string, TupleSet>{{"R", r}});
}

// x lies on a triangle.
const char* kTriangle = "E y z. ((R(x,y) & R(y,z)) & R(z,x))";

void BM_SatisfactionSetSerial(benchmark::State& state) {
  const Structure s = random_graph(static_cast<int>(state.range(0)));
  const Formula f = parse_formula(kTriangle);
  for (auto _ : state) benchmark::DoNotOptimize(satisfaction_set_serial(s, f));
}

void BM_SatisfactionSetParallel(benchmark::State& state) {
  const Structure s = random_graph(static_cast<int>(state.range(0)));
  const Formula f = parse_formula(kTriangle);
  for (auto _ : state) benchmark::DoNotOptimize(satisfaction_set(s, f));
}

}  // namespace

BENCHMARK(BM_FindModelSerial)->Args({4, 0})->Args({4, 1})->Args({5, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindModelParallel)->Args({4, 0})->Args({4, 1})->Args({5, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SatisfactionSetSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SatisfactionSetParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
