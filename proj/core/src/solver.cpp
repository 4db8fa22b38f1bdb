#include "circletik/solver.hpp"

/* Primal-dual proximal iteration for
 *
 *   minimize <s, e> + sum_e f((L s)_e),   f(Q) = ind{Q + Id >= 0},
 *
 * with f*(U) = -tr(U) + ind{U <= 0} and prox_{sigma f*}(V) given by
 * prox_dual in lifting.cpp. One iteration:
 *
 *   s+ = s - tau (L* U + e)            (pinned entries reset to y)
 *   U+_e = prox_dual(U_e + sigma (L (2 s+ - s))_e, sigma)
 *
 * The extrapolated point 2 s+ - s equals the classical s+ - tau (L* U + e)
 * whenever nothing is pinned.
 */

#include <algorithm>
#include <cmath>
#include <utility>

#include "circletik/error.hpp"

namespace circletik {

namespace {

void validate(const SolverConfig& cfg) {
  if (!(cfg.tau > 0.0) || !std::isfinite(cfg.tau)) {
    throw Error(ErrorCategory::invalid_input, "tau must be positive");
  }
  if (cfg.max_iters < 1) {
    throw Error(ErrorCategory::invalid_input, "max_iters must be >= 1");
  }
  if (!(cfg.tol >= 0.0) || !(cfg.tight_tol >= 0.0)) {
    throw Error(ErrorCategory::invalid_input, "tolerances must be >= 0");
  }
}

}  // namespace

SolveReport solve_relaxation(const ProblemInstance& inst,
                             const SolverConfig& cfg) {
  validate(cfg);
  const Graph& g = inst.graph();
  const std::size_t nn = g.node_count();
  const std::size_t ne = g.edge_count();
  const double sigma = 1.0 / (cfg.tau * operator_norm_sq(g));

  // Linear part of the objective; pinned nodes carry no data term.
  LiftedVariables e_vec = lifted_zero(g);
  for (std::size_t n = 0; n < nn; ++n) {
    const double w = inst.node_weight()[n];
    if (w > 0.0 && std::isfinite(w)) e_vec.x[n] = -w * inst.y()[n];
  }
  for (std::size_t e = 0; e < ne; ++e) {
    e_vec.r[e] = -inst.edge_weight()[e];
  }

  // Start from the renormalized observations and their exact lift.
  LiftedVariables s = rank1_lift(g, CircleSignal::project(inst.y()).values());
  for (std::size_t n = 0; n < nn; ++n) {
    if (inst.constrained(n)) s.x[n] = inst.y()[n];
  }
  BlockVec u(ne);

  LiftedVariables a, s_new, s_bar;
  SolveReport report;
  if (cfg.record_trace) {
    report.objective_trace.reserve(cfg.max_iters);
    report.step_trace.reserve(cfg.max_iters);
  }

  double step_change = 0.0;
  int iters = 0;
  while (iters < cfg.max_iters) {
    ++iters;

    lift_adjoint(g, u, a);
    for (std::size_t n = 0; n < nn; ++n) a.x[n] += e_vec.x[n];
    for (std::size_t e = 0; e < ne; ++e) a.r[e] += e_vec.r[e];

    s_new.x.resize(nn);
    s_new.r.resize(ne);
    for (std::size_t n = 0; n < nn; ++n) {
      s_new.x[n] =
          inst.constrained(n) ? inst.y()[n] : s.x[n] - cfg.tau * a.x[n];
    }
    for (std::size_t e = 0; e < ne; ++e) {
      s_new.r[e] = s.r[e] - cfg.tau * a.r[e];
    }

    s_bar.x.resize(nn);
    s_bar.r.resize(ne);
    for (std::size_t n = 0; n < nn; ++n) {
      s_bar.x[n] = 2.0 * s_new.x[n] - s.x[n];
    }
    for (std::size_t e = 0; e < ne; ++e) {
      s_bar.r[e] = 2.0 * s_new.r[e] - s.r[e];
    }

    for (std::size_t e = 0; e < ne; ++e) {
      const Edge& edge = g.edge(e);
      Hermitian3 v = u[e];
      v.d0 += sigma;
      v.d1 += sigma;
      v.d2 += sigma;
      v.l10 += sigma * s_bar.x[edge.a];
      v.l20 += sigma * s_bar.x[edge.b];
      v.l21 += sigma * std::conj(s_bar.r[e]);
      u[e] = project_nsd(v);
    }

    double diff_sq = 0.0;
    for (std::size_t n = 0; n < nn; ++n) diff_sq += std::norm(s_new.x[n] - s.x[n]);
    for (std::size_t e = 0; e < ne; ++e) diff_sq += std::norm(s_new.r[e] - s.r[e]);
    step_change = std::sqrt(diff_sq) / std::max(1.0, std::sqrt(norm_sq(s_new)));

    std::swap(s, s_new);

    if (cfg.record_trace) {
      report.objective_trace.push_back(cost_conv(inst, s));
      report.step_trace.push_back(step_change);
    }
    if (step_change < cfg.tol) break;
  }

  report.s_star = std::move(s);
  report.x_rounded = CircleSignal::project(report.s_star.x);
  report.psi_conv_star = cost_conv(inst, report.s_star);
  report.psi_approx = cost_orig(inst, report.x_rounded);
  report.certificate =
      tightness_certificate(g, report.s_star, cfg.tight_tol);
  report.relative_gap = report.psi_conv_star > 0.0
                            ? relative_gap(report.psi_approx,
                                           report.psi_conv_star)
                            : 0.0;
  report.iterations_run = iters;
  report.final_step_change = step_change;
  report.rotation_degenerate = inst.rotation_degenerate();
  return report;
}

}  // namespace circletik
