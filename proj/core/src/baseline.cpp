#include "circletik/baseline.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cmath>
#include <cstdint>
#include <vector>

#include "circletik/error.hpp"

namespace circletik {

BaselineResult solve_baseline(const ProblemInstance& inst) {
  const Graph& g = inst.graph();
  const std::size_t nn = g.node_count();
  const ComplexVec& y = inst.y();

  bool any_data = false;
  for (std::size_t n = 0; n < nn; ++n) {
    if (inst.node_weight()[n] > 0.0) any_data = true;
  }
  if (!any_data) {
    throw Error(ErrorCategory::invalid_input,
                "baseline needs at least one node with positive weight");
  }

  // Free unknowns: everything that is not pinned.
  std::vector<std::int64_t> index(nn, -1);
  std::size_t nfree = 0;
  for (std::size_t n = 0; n < nn; ++n) {
    if (!inst.constrained(n)) index[n] = static_cast<std::int64_t>(nfree++);
  }

  ComplexVec x(nn);
  for (std::size_t n = 0; n < nn; ++n) {
    if (inst.constrained(n)) x[n] = y[n];
  }

  if (nfree > 0) {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(nfree + 2 * g.edge_count());
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(nfree);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(nfree, 2);

    for (std::size_t n = 0; n < nn; ++n) {
      if (index[n] < 0) continue;
      const double w = inst.node_weight()[n];
      diag(index[n]) += w;
      rhs(index[n], 0) += w * y[n].real();
      rhs(index[n], 1) += w * y[n].imag();
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      const double lam = inst.edge_weight()[e];
      if (lam == 0.0) continue;
      const std::int64_t ia = index[edge.a];
      const std::int64_t ib = index[edge.b];
      if (ia >= 0) diag(ia) += lam;
      if (ib >= 0) diag(ib) += lam;
      if (ia >= 0 && ib >= 0) {
        trips.emplace_back(ia, ib, -lam);
        trips.emplace_back(ib, ia, -lam);
      } else if (ia >= 0) {
        rhs(ia, 0) += lam * y[edge.b].real();
        rhs(ia, 1) += lam * y[edge.b].imag();
      } else if (ib >= 0) {
        rhs(ib, 0) += lam * y[edge.a].real();
        rhs(ib, 1) += lam * y[edge.a].imag();
      }
    }
    for (std::size_t i = 0; i < nfree; ++i) {
      trips.emplace_back(i, i, diag(i));
    }

    Eigen::SparseMatrix<double> mat(nfree, nfree);
    mat.setFromTriplets(trips.begin(), trips.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(mat);
    if (ldlt.info() != Eigen::Success) {
      throw Error(ErrorCategory::singular_system,
                  "baseline normal equations failed to factorize");
    }
    const Eigen::MatrixXd sol = ldlt.solve(rhs);
    const double residual = (mat * sol - rhs).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    if (!std::isfinite(residual) || residual > 1e-8 * scale) {
      throw Error(ErrorCategory::singular_system,
                  "baseline normal equations are singular (a free region "
                  "carries no data)");
    }
    for (std::size_t n = 0; n < nn; ++n) {
      if (index[n] >= 0) x[n] = Complex{sol(index[n], 0), sol(index[n], 1)};
    }
  }

  BaselineResult out;
  out.x_unconstrained = std::move(x);
  out.x_rounded = CircleSignal::project(out.x_unconstrained, out.degenerate);
  out.psi_orig = cost_orig(inst, out.x_rounded);
  return out;
}

}  // namespace circletik
