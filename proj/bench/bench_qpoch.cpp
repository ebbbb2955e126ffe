#include <benchmark/benchmark.h>

#include "qpi/qkernel.hpp"

using namespace qpi;

namespace {

// q = 1 - 10^-e, where the product needs ~10^e * digits factors.
void run(benchmark::State& state, Exec exec) {
  const int digits = static_cast<int>(state.range(0));
  const long e = state.range(1);
  long den = 1;
  for (long i = 0; i < e; ++i) den *= 10;
  const Precision prec = Precision::digits(digits);
  const ApproxScalar q(Frac(den - 1, den), prec);
  const ApproxScalar x = q * ApproxScalar(Frac(1, 3), prec);
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_infinite(x, q, exec));
}

void BM_QpochSerial(benchmark::State& state) { run(state, Exec::kSerial); }
void BM_QpochParallel(benchmark::State& state) { run(state, Exec::kParallel); }

void grid(benchmark::internal::Benchmark* b) {
  for (int digits : {30, 100}) {
    for (int e : {2, 3, 4}) b->Args({digits, e});
  }
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_QpochSerial)->Apply(grid);
BENCHMARK(BM_QpochParallel)->Apply(grid);

BENCHMARK_MAIN();
