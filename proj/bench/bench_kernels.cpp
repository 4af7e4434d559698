#include "lsa/affine_harness.hpp"
#include "lsa/catalog.hpp"
#include "lsa/completeness.hpp"

#include <benchmark/benchmark.h>

using namespace lsa;

namespace {

std::vector<Algebra> conjugated_catalog() {
  Rng rng(1);
  std::vector<Algebra> v;
  for (const auto& en : catalog_lsas())
    v.push_back(change_basis(en.algebra(en.parametrized() ? en.defaults[0] : 0), rng.invertible(3)));
  return v;
}

template <bool Parallel>
void BM_completeness(benchmark::State& state) {
  auto algebras = conjugated_catalog();
  for (auto _ : state)
    for (const auto& a : algebras) benchmark::DoNotOptimize(Parallel ? is_complete(a) : serial::is_complete(a));
}

template <bool Parallel>
void BM_generic_rank(benchmark::State& state) {
  auto algebras = conjugated_catalog();
  for (auto _ : state)
    for (const auto& a : algebras)
      benchmark::DoNotOptimize(Parallel ? generic_rank(a, left_mult) : serial::generic_rank(a, left_mult));
}

template <bool Parallel>
void BM_jacobian_grid(benchmark::State& state) {
  auto fams = group_families();
  for (auto _ : state)
    for (const auto& f : fams)
      benchmark::DoNotOptimize(Parallel ? jacobian_min_abs_det(f, GridSpec{}) : serial::jacobian_min_abs_det(f, GridSpec{}));
}

template <bool Parallel>
void BM_injectivity_grid(benchmark::State& state) {
  GroupFamily f = make_group_family("GE3zeta");
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? injectivity_min_distance(f, GridSpec{}) : serial::injectivity_min_distance(f, GridSpec{}));
}

template <bool Parallel>
void BM_closure(benchmark::State& state) {
  Rng rng(2);
  auto pairs = closure_samples(rng, 50);
  GroupFamily f = make_group_family("GC3t");
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? check_closure(f, pairs).max_residual : serial::check_closure(f, pairs).max_residual);
}

}  // namespace

BENCHMARK(BM_completeness<false>)->Name("completeness/serial");
BENCHMARK(BM_completeness<true>)->Name("completeness/omp");
BENCHMARK(BM_generic_rank<false>)->Name("generic_rank/serial");
BENCHMARK(BM_generic_rank<true>)->Name("generic_rank/omp");
BENCHMARK(BM_jacobian_grid<false>)->Name("jacobian_grid/serial");
BENCHMARK(BM_jacobian_grid<true>)->Name("jacobian_grid/omp");
BENCHMARK(BM_injectivity_grid<false>)->Name("injectivity_grid/serial");
BENCHMARK(BM_injectivity_grid<true>)->Name("injectivity_grid/omp");
BENCHMARK(BM_closure<false>)->Name("closure/serial");
BENCHMARK(BM_closure<true>)->Name("closure/omp");

BENCHMARK_MAIN();
