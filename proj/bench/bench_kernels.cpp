// Serial reference kernels against their OpenMP versions.
// Arg(0) is the serial path; other args are OpenMP thread counts.

#include "liepres/analysis.hpp"
#include "liepres/quotient.hpp"
#include "liepres/structure_table.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>
#include <random>

using namespace liepres;

namespace {

const QuotientBasis& g2_basis()
{
  static const QuotientBasis q = quotient_closure(g2_presentation(), 8);
  return q;
}

const StructureTable& g2_table()
{
  static const StructureTable t = [] {
    const NamedBasisMap names = g2_named_basis();
    return structure_table(g2_basis(), &names, 1);
  }();
  return t;
}

RatMatrix random_matrix(std::size_t n)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  RatMatrix m(n, n + 3);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = make_rational(num(rng), den(rng));
  return m;
}

void BM_rref(benchmark::State& state)
{
  const RatMatrix m = random_matrix(40);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if (jobs == 0)
      benchmark::DoNotOptimize(rref_serial(m));
    else {
      omp_set_num_threads(jobs);
      benchmark::DoNotOptimize(rref(m));
    }
  }
}

void BM_jacobi(benchmark::State& state)
{
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(jobs == 0 ? check_jacobi_serial(g2_table()) : check_jacobi(g2_table(), jobs));
}

void BM_killing(benchmark::State& state)
{
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(jobs == 0 ? killing_form_serial(g2_table()) : killing_form(g2_table(), jobs));
}

void BM_structure_table(benchmark::State& state)
{
  const NamedBasisMap names = g2_named_basis();
  const int jobs = std::max<int>(1, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(structure_table(g2_basis(), &names, jobs));
}

void BM_closure(benchmark::State& state)
{
  const Presentation p = g2_presentation();
  const int jobs = std::max<int>(1, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(quotient_closure(p, ClosureOptions{8, jobs, false}));
}

}  // namespace

BENCHMARK(BM_rref)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jacobi)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_killing)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_structure_table)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
