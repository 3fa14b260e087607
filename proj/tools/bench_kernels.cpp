// Microbenchmarks comparing the OpenMP kernels against their serial
// reference implementations.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "ccover/corpus.hpp"
#include "ccover/formula.hpp"
#include "ccover/solver.hpp"

using namespace ccover;

namespace {

Formula hard_formula(int num_vars) {
  // Unsatisfiable and free of unit clauses, so the brute force scans the
  // whole assignment space.
  Rng rng(9001);
  Formula f = random_3cnf(rng, num_vars, num_vars * 5);
  f.clauses.push_back({{1, false}, {2, false}});
  f.clauses.push_back({{1, false}, {2, true}});
  f.clauses.push_back({{1, true}, {2, false}});
  f.clauses.push_back({{1, true}, {2, true}});
  return f;
}

void bm_brute_force_serial(benchmark::State& state) {
  Formula f = hard_formula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sat_serial(f));
}

void bm_brute_force_parallel(benchmark::State& state) {
  Formula f = hard_formula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sat(f));
}

Instance oriented_workload() {
  Rng rng(4242);
  return random_instance(rng, 14, 24, 12);
}

void bm_oriented_single_thread(benchmark::State& state) {
  Instance inst = oriented_workload();
  omp_set_num_threads(1);
  for (auto _ : state) benchmark::DoNotOptimize(min_cover_oriented(inst));
  omp_set_num_threads(omp_get_num_procs());
}

void bm_oriented_all_threads(benchmark::State& state) {
  Instance inst = oriented_workload();
  omp_set_num_threads(omp_get_num_procs());
  for (auto _ : state) benchmark::DoNotOptimize(min_cover_oriented(inst));
}

}  // namespace

BENCHMARK(bm_brute_force_serial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_brute_force_parallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_oriented_single_thread)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_oriented_all_threads)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
