#include <benchmark/benchmark.h>

#include <random>

#include "gf2bl/bracken_leander.hpp"
#include "gf2bl/spectrum.hpp"

namespace {

using namespace gf2bl;

Element sample(const Field& field, std::mt19937_64& rng) {
  return field.element(((Word{rng()} << 64) | rng()) & field.mask());
}

void BM_Mul(benchmark::State& state) {
  const FieldPtr field = Field::create(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  Element a = sample(*field, rng);
  const Element b = sample(*field, rng);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_Mul)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_EvalF(benchmark::State& state) {
  const BLContext ctx = make_context(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(2);
  Element x = sample(ctx.field(), rng);
  for (auto _ : state) {
    x = eval_f(x, ctx);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_EvalF)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Solve(benchmark::State& state) {
  const BLContext ctx = make_context(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(sample(ctx.field(), rng), ctx));
  }
}
BENCHMARK(BM_Solve)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SpectrumBrute(benchmark::State& state) {
  const BLContext ctx = make_context(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_brute(ctx));
}
BENCHMARK(BM_SpectrumBrute)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
