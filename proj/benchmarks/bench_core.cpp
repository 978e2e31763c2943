#include <benchmark/benchmark.h>

#include <random>

#include "legcat/category.hpp"

using namespace legcat;

namespace {

Vec random_tuple(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
  Vec out(n);
  for (Scalar& s : out) s = f.from_integer(d(rng));
  return out;
}

void BM_fast_right_mul(benchmark::State& state) {
  Field f = Field::prime(5);
  std::size_t n = state.range(0);
  std::mt19937_64 rng(1);
  Matrix m = Matrix::identity(f, n);
  Scalar z = f.from_integer(3);
  for (auto _ : state) {
    m = fast_right_mul(m, 1, z);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_fast_right_mul)->Arg(3)->Arg(6)->Arg(12);

void BM_naive_right_mul(benchmark::State& state) {
  Field f = Field::prime(5);
  std::size_t n = state.range(0);
  Matrix m = Matrix::identity(f, n);
  Matrix b = braid_matrix(f, n, 1, f.from_integer(3));
  for (auto _ : state) {
    m = m * b;
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_naive_right_mul)->Arg(3)->Arg(6)->Arg(12);

void BM_enumerate(benchmark::State& state) {
  Field f = Field::prime(state.range(0));
  BraidWord w(3, {1, 2, 1, 2, 1, 2});
  for (auto _ : state) {
    auto pts = enumerate_variety(f, w);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_enumerate)->Arg(2)->Arg(3)->Arg(5);

void BM_enumerate_threaded(benchmark::State& state) {
  Field f = Field::prime(5);
  BraidWord w(3, {1, 2, 1, 2, 1, 2, 1});
  EnumerateOptions opts;
  opts.threads = state.range(0);
  for (auto _ : state) {
    auto pts = enumerate_variety(f, w, opts);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_enumerate_threaded)->Arg(1)->Arg(2)->Arg(4);

void BM_graded_hom(benchmark::State& state) {
  Field f = Field::prime(5);
  std::mt19937_64 rng(2);
  BraidWord w(4, {1, 2, 3, 1, 2, 3, 1, 2});
  Vec x, y;
  while (x.empty() || !is_member(f, w, x)) x = random_tuple(f, 8, rng);
  while (y.empty() || !is_member(f, w, y)) y = random_tuple(f, 8, rng);
  for (auto _ : state) {
    GradedHom hom(delta_matrix(f, w, x, y));
    benchmark::DoNotOptimize(hom);
  }
}
BENCHMARK(BM_graded_hom);

}  // namespace

BENCHMARK_MAIN();
