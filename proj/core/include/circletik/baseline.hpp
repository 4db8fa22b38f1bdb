#pragma once

#include <vector>

#include "circletik/circle.hpp"
#include "circletik/problem.hpp"

namespace circletik {

struct BaselineResult {
  ComplexVec x_unconstrained;   // minimizer over all of C^N
  CircleSignal x_rounded;       // per-node renormalization
  std::vector<bool> degenerate; // entries that had no direction to keep
  double psi_orig = 0.0;        // original objective at x_rounded
};

// Quadratic surrogate: minimize over unconstrained complex x
//
//   sum_n w_n/2 |x_n - y_n|^2 + sum_e lambda_e/2 |x_n - x_n'|^2
//
// with pinned nodes (w = +inf) eliminated at their observation. The normal
// equations are one real symmetric positive definite sparse system shared
// by the real and imaginary parts. Renormalizing the minimizer gives the
// classical baseline the relaxation is compared against.
BaselineResult solve_baseline(const ProblemInstance& inst);

}  // namespace circletik
