#include <benchmark/benchmark.h>

#include <vector>

#include "circletik/lifting.hpp"
#include "circletik/oracle.hpp"
#include "circletik/rng.hpp"
#include "circletik/solver.hpp"
#include "circletik/synth.hpp"

using namespace circletik;

namespace {

BlockVec random_blocks(std::size_t count, std::uint64_t seed) {
  GaussianSampler rng(seed);
  BlockVec q(count);
  for (Hermitian3& b : q) {
    b.d0 = rng.gaussian();
    b.d1 = rng.gaussian();
    b.d2 = rng.gaussian();
    b.l10 = {rng.gaussian(), rng.gaussian()};
    b.l20 = {rng.gaussian(), rng.gaussian()};
    b.l21 = {rng.gaussian(), rng.gaussian()};
  }
  return q;
}

ProblemInstance chain_instance(std::size_t n, std::uint64_t seed) {
  SyntheticSpec1D spec;
  spec.n = n;
  spec.seed = seed;
  const SyntheticPair pair = gen_1d(spec);
  return ProblemInstance(Graph::chain(n), pair.noisy.values(),
                         std::vector<double>(n, 1.0),
                         std::vector<double>(n - 1, 50.0));
}

ProblemInstance grid_instance(std::size_t side, std::uint64_t seed) {
  SyntheticSpec2D spec;
  spec.height = side;
  spec.width = side;
  spec.seed = seed;
  const SyntheticPair pair = gen_2d(spec);
  const Graph g = Graph::grid(side, side);
  const std::size_t ne = g.edge_count();
  return ProblemInstance(g, pair.noisy.values(),
                         std::vector<double>(side * side, 1.0),
                         std::vector<double>(ne, 5.0));
}

void BM_ProjectNSD(benchmark::State& state) {
  const BlockVec blocks = random_blocks(256, 11);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_nsd(blocks[i]));
    i = (i + 1) & 255;
  }
}
BENCHMARK(BM_ProjectNSD);

void BM_ProxDual(benchmark::State& state) {
  const BlockVec blocks = random_blocks(256, 12);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_dual(blocks[i], 0.7));
    i = (i + 1) & 255;
  }
}
BENCHMARK(BM_ProxDual);

void BM_LiftAdjoint(benchmark::State& state) {
  const Graph g = Graph::chain(1000);
  const BlockVec q = random_blocks(g.edge_count(), 13);
  LiftedVariables out;
  for (auto _ : state) {
    lift_adjoint(g, q, out);
    benchmark::DoNotOptimize(out.x.data());
  }
}
BENCHMARK(BM_LiftAdjoint);

// Cost of one solver iteration, amortized over a fixed-length run.
void BM_SolverIterationChain1000(benchmark::State& state) {
  const ProblemInstance inst = chain_instance(1000, 1);
  SolverConfig cfg;
  cfg.max_iters = 50;
  cfg.tol = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_relaxation(inst, cfg).iterations_run);
  }
  state.SetItemsProcessed(state.iterations() * cfg.max_iters);
}
BENCHMARK(BM_SolverIterationChain1000)->Unit(benchmark::kMillisecond);

void BM_SolverIterationGrid32(benchmark::State& state) {
  const ProblemInstance inst = grid_instance(32, 1);
  SolverConfig cfg;
  cfg.max_iters = 50;
  cfg.tol = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_relaxation(inst, cfg).iterations_run);
  }
  state.SetItemsProcessed(state.iterations() * cfg.max_iters);
}
BENCHMARK(BM_SolverIterationGrid32)->Unit(benchmark::kMillisecond);

void BM_DpOracleChain(benchmark::State& state) {
  const ProblemInstance inst = chain_instance(12, 3);
  const std::size_t levels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp_min_tree(inst, levels).psi);
  }
}
BENCHMARK(BM_DpOracleChain)->Arg(256)->Arg(1024)->Arg(4096)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
