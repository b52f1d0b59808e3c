#include <benchmark/benchmark.h>

#include "ffsync/generators.hpp"
#include "ffsync/rng.hpp"

using namespace ffsync;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, Rng& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.uniform(f));
  return m;
}

// Reversed column order: equivalent, but the naive matcher scans the most.
Matrix reversed_columns(const Matrix& m) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m(i, m.cols() - 1 - j));
  return out;
}

void BM_PermEquivNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto a = random_matrix(Field(101), n, rng);
  const auto b = reversed_columns(a);
  for (auto _ : state) benchmark::DoNotOptimize(perm_equiv_naive(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PermEquivNaive)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void BM_PermEquivLex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto a = random_matrix(Field(101), n, rng);
  const auto b = reversed_columns(a);
  for (auto _ : state) benchmark::DoNotOptimize(perm_equiv_lex(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PermEquivLex)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void BM_Generate(benchmark::State& state, GenMethod method) {
  GenConfig cfg;
  cfg.n = static_cast<std::size_t>(state.range(0));
  cfg.field = Field(static_cast<std::uint32_t>(state.range(1)));
  cfg.method = method;
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(generate(cfg, rng));
}
BENCHMARK_CAPTURE(BM_Generate, sar, GenMethod::Sar)->Args({4, 3})->Args({8, 3})->Args({16, 101});
BENCHMARK_CAPTURE(BM_Generate, tf_upper, GenMethod::TfUpper)->Args({4, 3})->Args({8, 3})->Args({16, 101});
BENCHMARK_CAPTURE(BM_Generate, stabilizer, GenMethod::Stabilizer)->Args({4, 3})->Args({8, 3})->Args({16, 101});

void BM_Det(benchmark::State& state) {
  Rng rng(3);
  const auto m = random_matrix(Field(65'521), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Det)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNCubed);

void BM_CharPoly(benchmark::State& state) {
  Rng rng(3);
  const auto m = random_matrix(Field(65'521), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
