#include <benchmark/benchmark.h>

#include <cmath>

#include "sltaylor/gentaylor.hpp"
#include "sltaylor/recint.hpp"
#include "sltaylor/seeds.hpp"
#include "sltaylor/spps.hpp"
#include "sltaylor/sturm.hpp"
#include "sltaylor/transform.hpp"

using namespace sltaylor;

static void BM_FamilyBuild(benchmark::State& state) {
  const GridPtr grid = Grid::uniform(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  const SampledSeed seed = sample_seed(exp_seed(1.0), grid);
  FamilyOptions opt;
  opt.order = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RecursiveFamily::build(seed.f, opt, seed.f_prime));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(BM_FamilyBuild)->Args({1001, 20})->Args({5001, 20})->Args({5001, 60})->Unit(benchmark::kMillisecond);

static void BM_SppsEvaluate(benchmark::State& state) {
  const GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  const SampledSeed seed = sample_seed(exp_seed(1.0), grid);
  const RecursiveFamily family = RecursiveFamily::build(seed.f, {}, seed.f_prime);
  for (auto _ : state) {
    const SppsSolution u(family, Complex{3.0, 0.5}, static_cast<std::size_t>(state.range(0)), SolutionKind::u1);
    benchmark::DoNotOptimize(u.values());
  }
}
BENCHMARK(BM_SppsEvaluate)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

static void BM_TransformRecursive(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Jet phi = inverse_exp_seed(1.0).phi_jet(1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(build_A_recursive(phi, n));
}
BENCHMARK(BM_TransformRecursive)->Arg(5)->Arg(8)->Arg(16)->Arg(32);

static void BM_TransformClosedForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Jet phi = inverse_exp_seed(1.0).phi_jet(1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(build_A_closed_form(phi, n));
}
BENCHMARK(BM_TransformClosedForm)->Arg(5)->Arg(8);

static void BM_GammaSequence(benchmark::State& state) {
  const GridPtr grid = Grid::uniform(0.0, 1.0, 5001);
  const SampledSeed seed = sample_seed(exp_seed(1.0), grid);
  const RecursiveFamily family = RecursiveFamily::build(seed.f, {}, seed.f_prime);
  const GridFunction h = sample([](double x) { return std::cos(3.0 * x); }, grid);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_seq(h, family, 6));
}
BENCHMARK(BM_GammaSequence)->Unit(benchmark::kMillisecond);

static void BM_EigenSearch(benchmark::State& state) {
  const GridPtr grid = Grid::uniform(0.0, M_PI, 2001);
  const SlProblem problem(GridFunction::constant(grid, Complex{0.0, 0.0}), BoundaryCondition::dirichlet(),
                          BoundaryCondition::dirichlet());
  const RecursiveFamily family = build_problem_family(problem);
  EigenOptions opt;
  opt.lambda_min = -30.0;
  opt.lambda_max = -0.5;
  for (auto _ : state) benchmark::DoNotOptimize(find_eigenvalues(problem, family, opt));
}
BENCHMARK(BM_EigenSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
