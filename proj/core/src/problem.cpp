#include "circletik/problem.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "circletik/error.hpp"

namespace circletik {

ProblemInstance::ProblemInstance(Graph graph, ComplexVec y,
                                 std::vector<double> node_weight,
                                 std::vector<double> edge_weight)
    : graph_(std::move(graph)),
      y_(std::move(y)),
      node_weight_(std::move(node_weight)),
      edge_weight_(std::move(edge_weight)) {
  if (y_.size() != graph_.node_count() ||
      node_weight_.size() != graph_.node_count()) {
    throw Error(ErrorCategory::dimension_mismatch,
                "observations and node weights must match the node count");
  }
  if (edge_weight_.size() != graph_.edge_count()) {
    throw Error(ErrorCategory::dimension_mismatch,
                "edge weights must match the edge count");
  }
  bool any_data = false;
  for (std::size_t n = 0; n < node_weight_.size(); ++n) {
    const double w = node_weight_[n];
    if (std::isnan(w) || w < 0.0) {
      throw Error(ErrorCategory::invalid_input,
                  "node weight must be in [0, +inf], got NaN or negative at "
                  "index " + std::to_string(n));
    }
    if (!std::isfinite(y_[n].real()) || !std::isfinite(y_[n].imag())) {
      throw Error(ErrorCategory::invalid_input,
                  "non-finite observation at index " + std::to_string(n));
    }
    if (std::isinf(w)) {
      has_constraint_ = true;
      if (std::abs(std::abs(y_[n]) - 1.0) > kCircleTol) {
        throw Error(ErrorCategory::invalid_input,
                    "pinned observation off the unit circle at index " +
                        std::to_string(n));
      }
    }
    if (w > 0.0) any_data = true;
  }
  for (std::size_t e = 0; e < edge_weight_.size(); ++e) {
    if (!std::isfinite(edge_weight_[e]) || edge_weight_[e] < 0.0) {
      throw Error(ErrorCategory::invalid_input,
                  "edge weight must be finite and nonnegative at index " +
                      std::to_string(e));
    }
  }
  rotation_degenerate_ = !any_data;
}

double cost_orig(const ProblemInstance& inst, const CircleSignal& x) {
  if (x.size() != inst.graph().node_count()) {
    throw Error(ErrorCategory::dimension_mismatch,
                "signal length does not match the node count");
  }
  const ComplexVec& y = inst.y();
  double total = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double w = inst.node_weight()[n];
    if (w == 0.0) continue;
    if (std::isinf(w)) {
      if (std::abs(x[n] - y[n]) > kCircleTol) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    const double ysq = std::norm(y[n]);
    total += w * (0.5 * (1.0 + ysq) - (x[n] * std::conj(y[n])).real());
  }
  for (std::size_t e = 0; e < inst.graph().edge_count(); ++e) {
    const Edge& edge = inst.graph().edge(e);
    total += inst.edge_weight()[e] *
             (1.0 - (x[edge.a] * std::conj(x[edge.b])).real());
  }
  return total;
}

}  // namespace circletik
