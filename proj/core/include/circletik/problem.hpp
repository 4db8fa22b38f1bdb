#pragma once

#include <cmath>
#include <vector>

#include "circletik/circle.hpp"
#include "circletik/graph.hpp"

namespace circletik {

// Data of the smoothing / interpolation problem on a graph: one observation
// y_n per node (any complex value, |y_n| <= 1 encodes confidence), a node
// weight w_n in [0, +inf] where +inf pins x_n = y_n exactly (y_n must then
// lie on the circle), and a nonnegative weight lambda_e per edge.
class ProblemInstance {
 public:
  ProblemInstance(Graph graph, ComplexVec y, std::vector<double> node_weight,
                  std::vector<double> edge_weight);

  const Graph& graph() const { return graph_; }
  const ComplexVec& y() const { return y_; }
  const std::vector<double>& node_weight() const { return node_weight_; }
  const std::vector<double>& edge_weight() const { return edge_weight_; }

  bool constrained(std::size_t n) const { return std::isinf(node_weight_[n]); }
  bool has_constraint() const { return has_constraint_; }

  // True when every node weight is zero and nothing is pinned, so the
  // objective is invariant under a global rotation of x.
  bool rotation_degenerate() const { return rotation_degenerate_; }

 private:
  Graph graph_;
  ComplexVec y_;
  std::vector<double> node_weight_;
  std::vector<double> edge_weight_;
  bool has_constraint_ = false;
  bool rotation_degenerate_ = false;
};

// Value of the objective
//
//   sum_n w_n ( (1 + |y_n|^2)/2 - Re(x_n conj(y_n)) )
//     + sum_{(n,n') in E} lambda_e ( 1 - Re(x_n conj(x_n')) )
//
// over unit modulus x, additive constants included so the value is directly
// comparable across methods. A node with w_n = +inf contributes 0 when
// x_n = y_n within kCircleTol and +inf otherwise.
double cost_orig(const ProblemInstance& inst, const CircleSignal& x);

}  // namespace circletik
