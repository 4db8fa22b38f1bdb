#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace circletik {

// Undirected edge, stored with the canonical orientation a < b.
struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Connected undirected graph on contiguous 0-based node ids. Edges are
// canonicalized at construction; self loops, duplicate edges and
// disconnected inputs are rejected. Immutable afterwards.
class Graph {
 public:
  struct Incidence {
    std::uint32_t edge = 0;  // edge id
    bool first = false;      // node is the smaller endpoint of that edge
  };

  Graph(std::size_t node_count, std::vector<Edge> edges);

  // Path 0-1-...-(n-1), edges in node order.
  static Graph chain(std::size_t n);

  // 4-connected height x width grid, nodes row major. For each node in
  // row-major order the edge to its right neighbour is emitted before the
  // edge to the neighbour below, which fixes edge ids for per-edge weights.
  static Graph grid(std::size_t height, std::size_t width);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  const std::vector<Incidence>& incident(std::size_t node) const {
    return adjacency_[node];
  }
  std::size_t degree(std::size_t node) const { return adjacency_[node].size(); }
  std::size_t max_degree() const;

  bool is_tree() const { return edges_.size() + 1 == node_count_; }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

}  // namespace circletik
