// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "tiltkit/kernels.hpp"

using namespace tiltkit;

namespace {

const Field& field_for(int kind) {
  static const Field gf = Field::prime(kDefaultPrime);
  static const Field q = Field::rational();
  return kind == 0 ? gf : q;
}

template <Matrix (*Kernel)(const Matrix&, const Matrix&)>
void bm_multiply(benchmark::State& state) {
  const Field& f = field_for(static_cast<int>(state.range(1)));
  auto n = static_cast<std::size_t>(state.range(0));
  auto rng = make_rng(1);
  Matrix a = Matrix::random(f, n, n, rng), b = Matrix::random(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

template <Matrix::Rref (*Kernel)(const Matrix&)>
void bm_rref(benchmark::State& state) {
  const Field& f = field_for(static_cast<int>(state.range(1)));
  auto n = static_cast<std::size_t>(state.range(0));
  auto rng = make_rng(2);
  // rank-deficient input so pivoting and elimination both matter
  Matrix a = Matrix::random(f, n, n / 2, rng) * Matrix::random(f, n / 2, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a));
}

void sizes_gf(benchmark::internal::Benchmark* b) {
  for (int n : {32, 64, 128, 256}) b->Args({n, 0});
}

void sizes_q(benchmark::internal::Benchmark* b) {
  for (int n : {16, 32, 64}) b->Args({n, 1});
}

}  // namespace

BENCHMARK(bm_multiply<kernels::multiply_serial>)->Name("multiply/serial/gf")->Apply(sizes_gf);
BENCHMARK(bm_multiply<kernels::multiply_parallel>)->Name("multiply/parallel/gf")->Apply(sizes_gf);
BENCHMARK(bm_rref<kernels::rref_serial>)->Name("rref/serial/gf")->Apply(sizes_gf);
BENCHMARK(bm_rref<kernels::rref_parallel>)->Name("rref/parallel/gf")->Apply(sizes_gf);
BENCHMARK(bm_multiply<kernels::multiply_serial>)->Name("multiply/serial/q")->Apply(sizes_q);
BENCHMARK(bm_multiply<kernels::multiply_parallel>)->Name("multiply/parallel/q")->Apply(sizes_q);
BENCHMARK(bm_rref<kernels::rref_serial>)->Name("rref/serial/q")->Apply(sizes_q);
BENCHMARK(bm_rref<kernels::rref_parallel>)->Name("rref/parallel/q")->Apply(sizes_q);

BENCHMARK_MAIN();
