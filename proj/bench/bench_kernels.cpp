// Serial reference against OpenMP for the data-parallel kernels, plus the
// sequential Gram-Schmidt for scale.

#include <benchmark/benchmark.h>

#include <random>

#include "bandinv/kernels.hpp"
#include "bandinv/reconstruct.hpp"
#include "support/instances.hpp"

using namespace bandinv;

namespace {

struct Nodal {
  DenseMatrix values;
  std::vector<double> y;
};

Nodal nodal(std::size_t big_n) {
  std::mt19937_64 rng(big_n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Nodal d{DenseMatrix(big_n, big_n), std::vector<double>(big_n)};
  for (std::size_t i = 0; i < big_n; ++i)
    for (std::size_t t = 0; t < big_n; ++t) d.values(i, t) = u(rng);
  for (double& v : d.y) v = u(rng);
  return d;
}

template <auto F>
void band_products(benchmark::State& state) {
  const Nodal d = nodal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(d.values, d.y, 4));
}

template <auto F>
void off_band(benchmark::State& state) {
  const Nodal d = nodal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(d.values, d.y, 4));
}

template <auto F>
void gram(benchmark::State& state) {
  const Nodal d = nodal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(d.values));
}

std::vector<BandMatrix> batch(std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<BandMatrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(testing::random_instance(rng, 1 + i % 3, 12).matrix);
  return out;
}

template <auto F>
void roundtrips(benchmark::State& state) {
  const auto b = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(b, ReconstructOptions{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void gram_schmidt_only(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto inst = testing::random_instance(rng, 3, static_cast<std::size_t>(state.range(0)));
  const SpectralFunction s = spectral_function_identity(inst.matrix);
  for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt(s));
}

}  // namespace

BENCHMARK(band_products<kernels::band_products_serial>)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(band_products<kernels::band_products_omp>)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(off_band<kernels::off_band_max_serial>)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(off_band<kernels::off_band_max_omp>)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(gram<kernels::gram_serial>)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(gram<kernels::gram_omp>)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(roundtrips<kernels::roundtrip_batch_serial>)->Arg(64);
BENCHMARK(roundtrips<kernels::roundtrip_batch_omp>)->Arg(64);
BENCHMARK(gram_schmidt_only)->Arg(12)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
