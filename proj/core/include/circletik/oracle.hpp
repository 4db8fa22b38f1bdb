#pragma once

#include <cstdint>

#include "circletik/circle.hpp"
#include "circletik/graph.hpp"
#include "circletik/problem.hpp"

namespace circletik {

struct OracleResult {
  CircleSignal x;
  double psi = 0.0;
};

// Exact minimum of the original objective over a K-point discretization of
// the circle per node (level k at angle -pi + (2k+1) pi / K), computed by
// dynamic programming over a tree in O(|V| K^2). Pinned nodes use their
// exact observation angle as their only level. Requires K >= 8 and an
// acyclic graph.
OracleResult dp_min_tree(const ProblemInstance& inst, std::size_t levels);

// Same discretization minimized by full enumeration with branch-and-bound
// pruning; any topology, but limited to at most 4 nodes and K <= 256.
OracleResult exhaustive_min(const ProblemInstance& inst, std::size_t levels);

// Max residual |<L s, Q> - <s, L* Q>| over random Gaussian pairs (s, Q);
// zero up to roundoff when the adjoint is consistent with the block map.
double adjoint_selftest(const Graph& g, std::uint64_t seed, int trials = 100);

}  // namespace circletik
