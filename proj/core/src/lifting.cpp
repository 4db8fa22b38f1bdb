#include "circletik/lifting.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "circletik/error.hpp"

namespace circletik {

namespace {

Eigen::Matrix3cd to_eigen(const Hermitian3& a) {
  Eigen::Matrix3cd m;
  m(0, 0) = a.d0;
  m(1, 1) = a.d1;
  m(2, 2) = a.d2;
  m(1, 0) = a.l10;
  m(0, 1) = std::conj(a.l10);
  m(2, 0) = a.l20;
  m(0, 2) = std::conj(a.l20);
  m(2, 1) = a.l21;
  m(1, 2) = std::conj(a.l21);
  return m;
}

Hermitian3 from_eigen(const Eigen::Matrix3cd& m) {
  Hermitian3 a;
  a.d0 = m(0, 0).real();
  a.d1 = m(1, 1).real();
  a.d2 = m(2, 2).real();
  a.l10 = m(1, 0);
  a.l20 = m(2, 0);
  a.l21 = m(2, 1);
  return a;
}

void check_sizes(const Graph& g, const LiftedVariables& s) {
  if (s.x.size() != g.node_count() || s.r.size() != g.edge_count()) {
    throw Error(ErrorCategory::dimension_mismatch,
                "lifted variables do not match the graph");
  }
}

}  // namespace

Hermitian3 operator+(const Hermitian3& a, const Hermitian3& b) {
  return {a.d0 + b.d0, a.d1 + b.d1, a.d2 + b.d2,
          a.l10 + b.l10, a.l20 + b.l20, a.l21 + b.l21};
}

Hermitian3 operator-(const Hermitian3& a, const Hermitian3& b) {
  return {a.d0 - b.d0, a.d1 - b.d1, a.d2 - b.d2,
          a.l10 - b.l10, a.l20 - b.l20, a.l21 - b.l21};
}

Hermitian3 operator*(double t, const Hermitian3& a) {
  return {t * a.d0, t * a.d1, t * a.d2, t * a.l10, t * a.l20, t * a.l21};
}

Hermitian3 add_identity(const Hermitian3& a, double t) {
  Hermitian3 out = a;
  out.d0 += t;
  out.d1 += t;
  out.d2 += t;
  return out;
}

double frobenius_inner(const Hermitian3& a, const Hermitian3& b) {
  return a.d0 * b.d0 + a.d1 * b.d1 + a.d2 * b.d2 +
         2.0 * ((a.l10 * std::conj(b.l10)).real() +
                (a.l20 * std::conj(b.l20)).real() +
                (a.l21 * std::conj(b.l21)).real());
}

double frobenius_norm_sq(const Hermitian3& a) { return frobenius_inner(a, a); }

std::array<double, 3> eigenvalues(const Hermitian3& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(to_eigen(a),
                                                     Eigen::EigenvaluesOnly);
  const auto& v = es.eigenvalues();
  return {v(0), v(1), v(2)};
}

LiftedVariables lifted_zero(const Graph& g) {
  return {ComplexVec(g.node_count(), Complex{0.0, 0.0}),
          ComplexVec(g.edge_count(), Complex{0.0, 0.0})};
}

LiftedVariables rank1_lift(const Graph& g, const ComplexVec& x) {
  if (x.size() != g.node_count()) {
    throw Error(ErrorCategory::dimension_mismatch,
                "signal length does not match the node count");
  }
  LiftedVariables s;
  s.x = x;
  s.r.resize(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    s.r[e] = x[edge.a] * std::conj(x[edge.b]);
  }
  return s;
}

double inner(const LiftedVariables& a, const LiftedVariables& b) {
  double total = 0.0;
  for (std::size_t n = 0; n < a.x.size(); ++n) {
    total += (a.x[n] * std::conj(b.x[n])).real();
  }
  for (std::size_t e = 0; e < a.r.size(); ++e) {
    total += (a.r[e] * std::conj(b.r[e])).real();
  }
  return total;
}

double norm_sq(const LiftedVariables& a) { return inner(a, a); }

void lift_apply(const Graph& g, const LiftedVariables& s, BlockVec& out) {
  check_sizes(g, s);
  out.resize(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    Hermitian3& q = out[e];
    q.d0 = q.d1 = q.d2 = 0.0;
    q.l10 = s.x[edge.a];
    q.l20 = s.x[edge.b];
    q.l21 = std::conj(s.r[e]);
  }
}

BlockVec lift_apply(const Graph& g, const LiftedVariables& s) {
  BlockVec out;
  lift_apply(g, s, out);
  return out;
}

void lift_adjoint(const Graph& g, const BlockVec& q, LiftedVariables& out) {
  if (q.size() != g.edge_count()) {
    throw Error(ErrorCategory::dimension_mismatch,
                "block count does not match the edge count");
  }
  out.x.assign(g.node_count(), Complex{0.0, 0.0});
  out.r.resize(g.edge_count());
  // <Ls, Q> matches each off-diagonal pair twice, hence the factor 2.
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    Complex acc{0.0, 0.0};
    for (const Graph::Incidence& inc : g.incident(n)) {
      acc += inc.first ? q[inc.edge].l10 : q[inc.edge].l20;
    }
    out.x[n] = 2.0 * acc;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out.r[e] = 2.0 * std::conj(q[e].l21);
  }
}

LiftedVariables lift_adjoint(const Graph& g, const BlockVec& q) {
  LiftedVariables out;
  lift_adjoint(g, q, out);
  return out;
}

double operator_norm_sq(const Graph& g) {
  return 2.0 * static_cast<double>(g.max_degree());
}

Hermitian3 project_nsd(const Hermitian3& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(to_eigen(a));
  Eigen::Vector3d vals = es.eigenvalues();
  for (int i = 0; i < 3; ++i) vals(i) = std::min(vals(i), 0.0);
  const Eigen::Matrix3cd m = es.eigenvectors() * vals.asDiagonal() *
                             es.eigenvectors().adjoint();
  return from_eigen(m);
}

Hermitian3 prox_dual(const Hermitian3& u, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCategory::invalid_input, "sigma must be positive");
  }
  return project_nsd(add_identity(u, sigma));
}

MinorSlacks psd_minors_check(Complex c10, Complex c01, Complex cm11,
                             double tol) {
  if (tol < 0.0) {
    throw Error(ErrorCategory::invalid_input, "tolerance must be >= 0");
  }
  MinorSlacks m;
  m.slack10 = 1.0 - std::norm(c10);
  m.slack01 = 1.0 - std::norm(c01);
  m.slack11 = 1.0 - std::norm(cm11);
  m.slack_det = 1.0 + 2.0 * (c10 * cm11 * std::conj(c01)).real() -
                std::norm(c10) - std::norm(c01) - std::norm(cm11);
  m.pass = m.slack10 >= -tol && m.slack01 >= -tol && m.slack11 >= -tol &&
           m.slack_det >= -tol;
  return m;
}

double cost_conv(const ProblemInstance& inst, const LiftedVariables& s) {
  check_sizes(inst.graph(), s);
  const ComplexVec& y = inst.y();
  double total = 0.0;
  for (std::size_t n = 0; n < s.x.size(); ++n) {
    const double w = inst.node_weight()[n];
    if (w == 0.0) continue;
    if (std::isinf(w)) {
      if (std::abs(s.x[n] - y[n]) > kCircleTol) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    const double ysq = std::norm(y[n]);
    total += w * (0.5 * (1.0 + ysq) - (s.x[n] * std::conj(y[n])).real());
  }
  for (std::size_t e = 0; e < inst.graph().edge_count(); ++e) {
    total += inst.edge_weight()[e] * (1.0 - s.r[e].real());
  }
  return total;
}

TightnessCertificate tightness_certificate(const Graph& g,
                                           const LiftedVariables& s,
                                           double tol) {
  check_sizes(g, s);
  if (tol < 0.0) {
    throw Error(ErrorCategory::invalid_input, "tolerance must be >= 0");
  }
  TightnessCertificate cert;
  cert.tolerance = tol;
  for (const Complex& xn : s.x) {
    cert.max_modulus_deviation = std::max(cert.max_modulus_deviation,
                                          std::abs(std::abs(xn) - 1.0));
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    cert.max_rank1_residual =
        std::max(cert.max_rank1_residual,
                 std::abs(s.r[e] - s.x[edge.a] * std::conj(s.x[edge.b])));
  }
  cert.tight =
      cert.max_modulus_deviation <= tol && cert.max_rank1_residual <= tol;
  return cert;
}

double relative_gap(double psi_approx, double psi_conv) {
  if (!(psi_conv > 0.0)) {
    throw Error(ErrorCategory::invalid_input,
                "relative gap needs a positive relaxed value");
  }
  double gap = (psi_approx - psi_conv) / psi_conv;
  if (gap < 0.0 && gap >= -1e-9) gap = 0.0;
  return gap;
}

}  // namespace circletik
