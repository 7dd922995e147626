// Parallel kernels against their serial references: the fraction-free
// polynomial determinant and the (n,k) sublink check fan-out.

#include <benchmark/benchmark.h>

#include <random>

#include "brunnel/alexpoly.hpp"
#include "brunnel/catalog.hpp"
#include "brunnel/nk.hpp"
#include "brunnel/surface.hpp"

using namespace brunnel;

namespace {

// Alexander matrix minor of a catalog knot.
PolyMatrix knot_minor(const std::string& name) {
  PolyMatrix m = alexander_matrix(catalog_diagram(name));
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return m;
}

// Dense matrix with linear entries a + b t, |a|, |b| <= 3.
PolyMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<IntPoly>(static_cast<std::size_t>(n)));
  for (auto& row : m) {
    for (auto& e : row) e = IntPoly{coeff(rng), coeff(rng)};
  }
  return m;
}

template <IntPoly (*Det)(PolyMatrix)>
void bm_det_knot(benchmark::State& state) {
  const PolyMatrix m = knot_minor("slice-k");
  for (auto _ : state) benchmark::DoNotOptimize(Det(m));
}

template <IntPoly (*Det)(PolyMatrix)>
void bm_det_random(benchmark::State& state) {
  const PolyMatrix m = random_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(Det(m));
}

template <NkReport (*Check)(const NkConstruction&)>
void bm_nk(benchmark::State& state) {
  const NkConstruction c =
      generate_nk(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), base_descriptor("disk"));
  for (auto _ : state) benchmark::DoNotOptimize(Check(c));
}

}  // namespace

BENCHMARK(bm_det_knot<determinant>)->Name("determinant/parallel/slice-k")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_det_knot<determinant_serial>)->Name("determinant/serial/slice-k")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_det_random<determinant>)->Name("determinant/parallel/random")->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_det_random<determinant_serial>)->Name("determinant/serial/random")->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_nk<check_nk>)->Name("nk-check/parallel")->Args({6, 3})->Args({8, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_nk<check_nk_serial>)->Name("nk-check/serial")->Args({6, 3})->Args({8, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
