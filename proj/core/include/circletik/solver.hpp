#pragma once

#include <vector>

#include "circletik/lifting.hpp"
#include "circletik/problem.hpp"

namespace circletik {

struct SolverConfig {
  double tau = 0.1;       // primal step; the dual step is derived below
  int max_iters = 5000;
  double tol = 1e-12;     // stop when |s+ - s| / max(1, |s+|) drops below
  double tight_tol = 1e-6;
  bool record_trace = false;
};

struct SolveReport {
  LiftedVariables s_star;
  CircleSignal x_rounded;      // per-node renormalization of s_star.x
  double psi_conv_star = 0.0;  // relaxed objective at s_star
  double psi_approx = 0.0;     // original objective at x_rounded
  TightnessCertificate certificate;
  double relative_gap = 0.0;   // 0 when psi_conv_star <= 0
  int iterations_run = 0;
  double final_step_change = 0.0;
  bool rotation_degenerate = false;
  // Filled when record_trace: relaxed objective and relative step change
  // after each iteration.
  std::vector<double> objective_trace;
  std::vector<double> step_trace;
};

// Minimizes the semidefinite relaxation with a primal-dual proximal
// iteration. Nodes with w_n = +inf are enforced exactly after every primal
// step. The dual step is sigma = 1 / (tau ||L||^2), so any tau > 0
// converges.
SolveReport solve_relaxation(const ProblemInstance& inst,
                             const SolverConfig& cfg = {});

}  // namespace circletik
