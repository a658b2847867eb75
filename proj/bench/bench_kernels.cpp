// Serial reference kernels against their OpenMP counterparts.
//
//   ./feleak_bench --benchmark_filter=matmul
//   OMP_NUM_THREADS=4 ./feleak_bench

#include <benchmark/benchmark.h>

#include <random>

#include "feleak/attack.hpp"
#include "feleak/kernels.hpp"

using namespace feleak;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> d(-1, 1);
  Matrix m(r, c);
  for (double& v : m.storage()) v = d(eng);
  return m;
}

Vector random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> d(0.1, 1);
  Vector v(n);
  for (double& x : v) x = d(eng);
  return v;
}

// Split-training shapes: a batch of inputs times W1.
template <auto Kernel>
void bm_matmul(benchmark::State& state) {
  const auto b = static_cast<std::size_t>(state.range(0));
  const Matrix x = random_matrix(b, 784, 1), w = random_matrix(784, 300, 2);
  Matrix out(b, 300);
  for (auto _ : state) {
    Kernel(x, w, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b * 784 * 300));
}

// Weight gradient X^T dZ1.
template <auto Kernel>
void bm_matmul_at_b(benchmark::State& state) {
  const auto b = static_cast<std::size_t>(state.range(0));
  const Matrix x = random_matrix(b, 784, 3), dz = random_matrix(b, 300, 4);
  Matrix out(784, 300);
  for (auto _ : state) {
    Kernel(x, dz, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b * 784 * 300));
}

// Normal equations of the interior-point solver: A D A^T.
template <auto Kernel>
void bm_weighted_gram(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(m, 1024, 5);
  const Vector d = random_vector(1024, 6);
  Matrix out(m, m);
  for (auto _ : state) {
    Kernel(a, d, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Kernel>
void bm_matvec(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(m, 1024, 7);
  const Vector x = random_vector(1024, 8);
  Vector y(m);
  for (auto _ : state) {
    Kernel(a, x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void bm_gauss_1100x1024(benchmark::State& state) {
  const Matrix w = random_matrix(1100, 1024, 9);
  const Vector x = random_vector(1024, 10);
  Vector z(1100);
  kernels::serial::matvec(w, x, z);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = parallel ? attack::recover_gauss(w, z) : attack::recover_gauss_serial(w, z);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetLabel(parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(bm_matmul<kernels::serial::matmul>)->Name("matmul/serial")->Arg(10)->Arg(500);
BENCHMARK(bm_matmul<kernels::parallel::matmul>)->Name("matmul/parallel")->Arg(10)->Arg(500);
BENCHMARK(bm_matmul_at_b<kernels::serial::matmul_at_b>)->Name("matmul_at_b/serial")->Arg(10)->Arg(500);
BENCHMARK(bm_matmul_at_b<kernels::parallel::matmul_at_b>)->Name("matmul_at_b/parallel")->Arg(10)->Arg(500);
BENCHMARK(bm_weighted_gram<kernels::serial::weighted_gram>)->Name("weighted_gram/serial")->Arg(350)->Arg(862);
BENCHMARK(bm_weighted_gram<kernels::parallel::weighted_gram>)->Name("weighted_gram/parallel")->Arg(350)->Arg(862);
BENCHMARK(bm_matvec<kernels::serial::matvec>)->Name("matvec/serial")->Arg(1100);
BENCHMARK(bm_matvec<kernels::parallel::matvec>)->Name("matvec/parallel")->Arg(1100);
BENCHMARK(bm_gauss_1100x1024)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
