#pragma once

/* Semidefinite lifting of the circle-valued smoothing objective.
 *
 * The nonconvex objective is quadratic in the unit modulus unknowns x_n, so
 * each edge term can be written against the 3x3 Hermitian moment block
 *
 *        [ 1      conj(x_n)  conj(x_n') ]
 *   P  = [ x_n    1          r_e        ]      r_e ~ x_n conj(x_n'),
 *        [ x_n'   conj(r_e)  1          ]
 *
 * which is PSD with unit diagonal for any distribution of (x_n, x_n') on the
 * circle and rank one exactly for a deterministic pair. Dropping the rank
 * constraint keeps the objective linear in s = (x, r) under the block map
 *
 *   (L s)_e = [ 0     conj(x_n)  conj(x_n') ]
 *             [ x_n   0          r_e        ]
 *             [ x_n'  conj(r_e)  0          ]         (zero diagonal),
 *
 * and the convex relaxation minimizes <s, e> subject to (L s)_e + Id >= 0
 * for every edge. Real inner products throughout: <z, z'> = Re(z conj(z'))
 * on complex scalars, <Q, Q'> = tr(Q Q') on Hermitian blocks.
 */

#include <array>
#include <cstddef>
#include <vector>

#include "circletik/circle.hpp"
#include "circletik/graph.hpp"
#include "circletik/problem.hpp"

namespace circletik {

// Dense 3x3 Hermitian matrix: real diagonal plus lower triangle.
struct Hermitian3 {
  double d0 = 0.0, d1 = 0.0, d2 = 0.0;
  Complex l10{0.0, 0.0};  // entry (1,0)
  Complex l20{0.0, 0.0};  // entry (2,0)
  Complex l21{0.0, 0.0};  // entry (2,1)
};

Hermitian3 operator+(const Hermitian3& a, const Hermitian3& b);
Hermitian3 operator-(const Hermitian3& a, const Hermitian3& b);
Hermitian3 operator*(double t, const Hermitian3& a);
Hermitian3 add_identity(const Hermitian3& a, double t);

// tr(A B) for Hermitian A, B; real by symmetry.
double frobenius_inner(const Hermitian3& a, const Hermitian3& b);
double frobenius_norm_sq(const Hermitian3& a);

// Eigenvalues in ascending order.
std::array<double, 3> eigenvalues(const Hermitian3& a);

// Primal unknowns of the relaxation: one x per node, one r per edge
// (r_e plays the role of x_n conj(x_n') on the canonical edge (n, n')).
struct LiftedVariables {
  ComplexVec x;
  ComplexVec r;
};

// One Hermitian block per edge (dual variables, block images, ...).
using BlockVec = std::vector<Hermitian3>;

LiftedVariables lifted_zero(const Graph& g);

// Exact lift of a circle-valued signal: r_e = x_n conj(x_n').
LiftedVariables rank1_lift(const Graph& g, const ComplexVec& x);

double inner(const LiftedVariables& a, const LiftedVariables& b);
double norm_sq(const LiftedVariables& a);

// Block map L and its adjoint. <L s, Q> = <s, L* Q> for all s, Q.
BlockVec lift_apply(const Graph& g, const LiftedVariables& s);
void lift_apply(const Graph& g, const LiftedVariables& s, BlockVec& out);
LiftedVariables lift_adjoint(const Graph& g, const BlockVec& q);
void lift_adjoint(const Graph& g, const BlockVec& q, LiftedVariables& out);

// ||L||^2 = 2 max_degree (attained by the indicator of a max degree node).
double operator_norm_sq(const Graph& g);

// Projection onto the negative semidefinite cone (eigenvalue clamping).
Hermitian3 project_nsd(const Hermitian3& a);

// Resolvent of sigma f* where f*(U) = -tr(U) + indicator{U <= 0}:
// prox(U) = Pi_NSD(U + sigma Id).
Hermitian3 prox_dual(const Hermitian3& u, double sigma);

// Slacks of the four principal minor conditions equivalent to PSD for a
// unit diagonal block with lower entries (c10, c01, cm11); pass when all
// slacks are >= -tol.
struct MinorSlacks {
  double slack10 = 0.0;   // 1 - |c10|^2
  double slack01 = 0.0;   // 1 - |c01|^2
  double slack11 = 0.0;   // 1 - |cm11|^2
  double slack_det = 0.0; // determinant of the full block
  bool pass = false;
};

MinorSlacks psd_minors_check(Complex c10, Complex c01, Complex cm11,
                             double tol);

// Relaxed objective: node terms of cost_orig evaluated at the free x plus
// sum_e lambda_e (1 - Re r_e). Pinned nodes contribute 0 or +inf.
double cost_conv(const ProblemInstance& inst, const LiftedVariables& s);

// A relaxed solution is certified exact when every x_n has unit modulus and
// every r_e equals x_n conj(x_n') within tol; the rounded signal is then a
// global minimizer of the original objective.
struct TightnessCertificate {
  bool tight = false;
  double max_modulus_deviation = 0.0;
  double max_rank1_residual = 0.0;
  double tolerance = 0.0;
};

TightnessCertificate tightness_certificate(const Graph& g,
                                           const LiftedVariables& s,
                                           double tol);

// (psi_approx - psi_conv) / psi_conv for psi_conv > 0; negative values
// within 1e-9 (roundoff on a tight pair) clamp to 0.
double relative_gap(double psi_approx, double psi_conv);

}  // namespace circletik
