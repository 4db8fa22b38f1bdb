#include "circletik/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "circletik/error.hpp"
#include "circletik/lifting.hpp"
#include "circletik/rng.hpp"

namespace circletik {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Discrete angles shared by both oracles: level k at -pi + (2k+1) pi / K.
std::vector<double> level_grid(std::size_t levels) {
  std::vector<double> grid(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    grid[k] = -std::numbers::pi +
              (2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi /
                  static_cast<double>(levels);
  }
  return grid;
}

// Angles available at a node: the shared grid, or the exact observation
// angle when the node is pinned.
struct NodeLevels {
  bool pinned = false;
  double pinned_angle = 0.0;

  std::size_t count(std::size_t levels) const { return pinned ? 1 : levels; }
  double angle(const std::vector<double>& grid, std::size_t k) const {
    return pinned ? pinned_angle : grid[k];
  }
};

std::vector<NodeLevels> make_levels(const ProblemInstance& inst) {
  std::vector<NodeLevels> out(inst.graph().node_count());
  for (std::size_t n = 0; n < out.size(); ++n) {
    if (inst.constrained(n)) {
      out[n] = {true, arg_principal(inst.y()[n])};
    }
  }
  return out;
}

// w_n ((1 + |y_n|^2)/2 - |y_n| cos(theta - arg y_n)); pinned nodes sit at
// their observation, contributing 0.
double node_cost(const ProblemInstance& inst, std::size_t n, double theta) {
  const double w = inst.node_weight()[n];
  if (w == 0.0 || std::isinf(w)) return 0.0;
  const double mag = std::abs(inst.y()[n]);
  double cost = w * 0.5 * (1.0 + mag * mag);
  if (mag > 0.0) {
    cost -= w * mag * std::cos(theta - arg_principal(inst.y()[n]));
  }
  return cost;
}

double edge_cost(double lambda, double ta, double tb) {
  return lambda * (1.0 - std::cos(ta - tb));
}

}  // namespace

OracleResult dp_min_tree(const ProblemInstance& inst, std::size_t levels) {
  const Graph& g = inst.graph();
  if (!g.is_tree()) {
    throw Error(ErrorCategory::unsupported_topology,
                "dynamic programming needs an acyclic graph");
  }
  if (levels < 8) {
    throw Error(ErrorCategory::invalid_input, "need at least 8 levels");
  }

  const std::size_t nn = g.node_count();
  const std::vector<double> grid = level_grid(levels);
  const std::vector<NodeLevels> node_levels = make_levels(inst);

  // Root the tree at node 0 (BFS order, so reverse order is child first).
  std::vector<std::int64_t> parent(nn, -1);
  std::vector<std::uint32_t> parent_edge(nn, 0);
  std::vector<std::uint32_t> order;
  order.reserve(nn);
  std::vector<char> visited(nn, 0);
  order.push_back(0);
  visited[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t v = order[head];
    for (const Graph::Incidence& inc : g.incident(v)) {
      const Edge& e = g.edge(inc.edge);
      const std::uint32_t other = inc.first ? e.b : e.a;
      if (!visited[other]) {
        visited[other] = 1;
        parent[other] = v;
        parent_edge[other] = inc.edge;
        order.push_back(other);
      }
    }
  }

  // table[n][k]: cost of the subtree under n with node n held at level k.
  std::vector<std::vector<double>> table(nn);
  for (std::size_t n = 0; n < nn; ++n) {
    const std::size_t cnt = node_levels[n].count(levels);
    table[n].resize(cnt);
    for (std::size_t k = 0; k < cnt; ++k) {
      table[n][k] = node_cost(inst, n, node_levels[n].angle(grid, k));
    }
  }

  // cos((j - K) 2 pi / K) over j in [0, 2K) resolves any grid-to-grid angle
  // difference without a modulo in the inner loop.
  std::vector<double> costab(2 * levels);
  for (std::size_t j = 0; j < costab.size(); ++j) {
    costab[j] = std::cos((static_cast<double>(j) - static_cast<double>(levels)) *
                         2.0 * std::numbers::pi / static_cast<double>(levels));
  }
  std::vector<double> lamtab(2 * levels);

  std::vector<std::vector<std::uint32_t>> choice(nn);
  for (std::size_t idx = order.size(); idx-- > 1;) {
    const std::uint32_t c = order[idx];
    const std::uint32_t p = static_cast<std::uint32_t>(parent[c]);
    const double lambda = inst.edge_weight()[parent_edge[c]];
    const std::size_t pc = node_levels[p].count(levels);
    const std::size_t cc = node_levels[c].count(levels);
    choice[c].resize(pc);

    if (!node_levels[p].pinned && !node_levels[c].pinned) {
      for (std::size_t j = 0; j < lamtab.size(); ++j) {
        lamtab[j] = lambda * (1.0 - costab[j]);
      }
      const double* tc = table[c].data();
      for (std::size_t ip = 0; ip < pc; ++ip) {
        const double* lam = lamtab.data() + (levels - ip);
        double best = kInf;
        std::uint32_t best_ic = 0;
        for (std::size_t ic = 0; ic < cc; ++ic) {
          const double v = tc[ic] + lam[ic];
          if (v < best) {
            best = v;
            best_ic = static_cast<std::uint32_t>(ic);
          }
        }
        table[p][ip] += best;
        choice[c][ip] = best_ic;
      }
    } else {
      for (std::size_t ip = 0; ip < pc; ++ip) {
        const double tp = node_levels[p].angle(grid, ip);
        double best = kInf;
        std::uint32_t best_ic = 0;
        for (std::size_t ic = 0; ic < cc; ++ic) {
          const double v = table[c][ic] +
                           edge_cost(lambda, node_levels[c].angle(grid, ic), tp);
          if (v < best) {
            best = v;
            best_ic = static_cast<std::uint32_t>(ic);
          }
        }
        table[p][ip] += best;
        choice[c][ip] = best_ic;
      }
    }
  }

  std::size_t root_level = 0;
  double psi = kInf;
  for (std::size_t k = 0; k < table[0].size(); ++k) {
    if (table[0][k] < psi) {
      psi = table[0][k];
      root_level = k;
    }
  }

  std::vector<std::uint32_t> pick(nn, 0);
  pick[0] = static_cast<std::uint32_t>(root_level);
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const std::uint32_t n = order[idx];
    pick[n] = choice[n][pick[static_cast<std::size_t>(parent[n])]];
  }
  std::vector<double> angles(nn);
  for (std::size_t n = 0; n < nn; ++n) {
    angles[n] = node_levels[n].angle(grid, pick[n]);
  }
  return {CircleSignal::from_angles(angles), psi};
}

OracleResult exhaustive_min(const ProblemInstance& inst, std::size_t levels) {
  const Graph& g = inst.graph();
  if (g.node_count() > 4) {
    throw Error(ErrorCategory::invalid_size,
                "exhaustive search is limited to 4 nodes");
  }
  if (levels < 2 || levels > 256) {
    throw Error(ErrorCategory::invalid_input, "levels must be in [2, 256]");
  }

  const std::size_t nn = g.node_count();
  const std::vector<double> grid = level_grid(levels);
  const std::vector<NodeLevels> node_levels = make_levels(inst);

  // Edges to already-assigned (smaller id) nodes, so each edge is charged
  // exactly once during the scan.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> back(nn);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    back[edge.b].push_back({edge.a, inst.edge_weight()[e]});
  }

  std::vector<std::size_t> assign(nn, 0), best_assign(nn, 0);
  std::vector<double> angle(nn, 0.0);
  double best = kInf;

  // Depth-first over nodes in id order with partial-cost pruning.
  std::vector<double> partial(nn + 1, 0.0);
  std::size_t depth = 0;
  assign[0] = 0;
  while (true) {
    if (assign[depth] < node_levels[depth].count(levels)) {
      const double theta = node_levels[depth].angle(grid, assign[depth]);
      double cost = partial[depth] + node_cost(inst, depth, theta);
      for (const auto& [other, lambda] : back[depth]) {
        cost += edge_cost(lambda, theta, angle[other]);
      }
      if (cost < best) {
        angle[depth] = theta;
        if (depth + 1 == nn) {
          best = cost;
          best_assign = assign;
          ++assign[depth];
        } else {
          partial[depth + 1] = cost;
          ++depth;
          assign[depth] = 0;
        }
      } else {
        ++assign[depth];
      }
    } else {
      if (depth == 0) break;
      --depth;
      ++assign[depth];
    }
  }

  std::vector<double> best_angles(nn);
  for (std::size_t n = 0; n < nn; ++n) {
    best_angles[n] = node_levels[n].angle(grid, best_assign[n]);
  }
  return {CircleSignal::from_angles(best_angles), best};
}

double adjoint_selftest(const Graph& g, std::uint64_t seed, int trials) {
  if (trials < 1) {
    throw Error(ErrorCategory::invalid_input, "need at least one trial");
  }
  GaussianSampler rng(seed);
  auto gauss_complex = [&rng]() {
    return Complex{rng.gaussian(), rng.gaussian()};
  };
  double worst = 0.0;
  LiftedVariables s = lifted_zero(g);
  BlockVec q(g.edge_count());
  BlockVec ls;
  LiftedVariables lq;
  for (int t = 0; t < trials; ++t) {
    for (Complex& v : s.x) v = gauss_complex();
    for (Complex& v : s.r) v = gauss_complex();
    for (Hermitian3& b : q) {
      b.d0 = rng.gaussian();
      b.d1 = rng.gaussian();
      b.d2 = rng.gaussian();
      b.l10 = gauss_complex();
      b.l20 = gauss_complex();
      b.l21 = gauss_complex();
    }
    lift_apply(g, s, ls);
    lift_adjoint(g, q, lq);
    double lhs = 0.0;
    for (std::size_t e = 0; e < q.size(); ++e) {
      lhs += frobenius_inner(ls[e], q[e]);
    }
    worst = std::max(worst, std::abs(lhs - inner(s, lq)));
  }
  return worst;
}

}  // namespace circletik
