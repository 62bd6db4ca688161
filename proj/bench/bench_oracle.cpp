// Serial and OpenMP paths of the word sweeps and of the per-layer
// decomposition loop, on the same inputs.

#include <benchmark/benchmark.h>

#include "lexcover/decompose.hpp"
#include "lexcover/oracle.hpp"
#include "lexcover/text_format.hpp"

using namespace lexcover;

namespace {

// Dense enough over {a,b} that relation evaluation dominates.
const char* kTransducer = R"(transducer B
alphabet a b
outalphabet b c
states p q r
initial p
final p q r
trans p a/b p
trans p a/bb q
trans p b/c p
trans q a/- p
trans q b/cb r
trans r a/b r
trans r b/- p
trans r a/c q
)";

// a^n -> {b^n, b^(n+1)}.
const char* kTwoValued = R"(transducer T
alphabet a
outalphabet b
states p q
initial p
final p q
trans p a/b p
trans p a/bb q
trans q a/- p
)";

oracle::Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? oracle::Execution::Parallel
                        : oracle::Execution::Serial;
}

void BM_Valuedness(benchmark::State& state) {
  const Machine t = parse_machine(kTransducer);
  const auto len = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::valuedness_up_to(t, len, exec_of(state)));
}

void BM_SelfEquivalence(benchmark::State& state) {
  const Machine t = parse_machine(kTransducer);
  const auto len = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::equivalent_up_to(t, t, len, exec_of(state)));
}

void BM_Decompose(benchmark::State& state) {
  const Machine t = parse_machine(kTwoValued);
  DecompositionOptions opts;
  opts.check_length = 12;
  opts.exec = exec_of(state);
  for (auto _ : state) {
    auto r = decompose_k_valued(t, 2, opts);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_Valuedness)->ArgNames({"parallel", "len"})->ArgsProduct({{0, 1}, {8, 10}});
BENCHMARK(BM_SelfEquivalence)->ArgNames({"parallel", "len"})->ArgsProduct({{0, 1}, {8, 10}});
BENCHMARK(BM_Decompose)->ArgNames({"parallel"})->Args({0})->Args({1});

BENCHMARK_MAIN();
