#include "circletik/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "circletik/error.hpp"

namespace circletik {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 2) {
    throw Error(ErrorCategory::invalid_size, "graph needs at least 2 nodes");
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  for (Edge& e : edges_) {
    if (e.a >= node_count_ || e.b >= node_count_) {
      throw Error(ErrorCategory::invalid_input,
                  "edge endpoint out of range: (" + std::to_string(e.a) +
                      ", " + std::to_string(e.b) + ")");
    }
    if (e.a == e.b) {
      throw Error(ErrorCategory::invalid_input,
                  "self loop at node " + std::to_string(e.a));
    }
    if (e.a > e.b) std::swap(e.a, e.b);
    const std::uint64_t key =
        static_cast<std::uint64_t>(e.a) * node_count_ + e.b;
    if (!seen.insert(key).second) {
      throw Error(ErrorCategory::invalid_input,
                  "duplicate edge (" + std::to_string(e.a) + ", " +
                      std::to_string(e.b) + ")");
    }
  }

  adjacency_.resize(node_count_);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].a].push_back({static_cast<std::uint32_t>(e), true});
    adjacency_[edges_[e].b].push_back({static_cast<std::uint32_t>(e), false});
  }

  // Connectivity via BFS from node 0.
  std::vector<char> visited(node_count_, 0);
  std::vector<std::uint32_t> queue{0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::uint32_t v = queue.back();
    queue.pop_back();
    for (const Incidence& inc : adjacency_[v]) {
      const Edge& e = edges_[inc.edge];
      const std::uint32_t other = inc.first ? e.b : e.a;
      if (!visited[other]) {
        visited[other] = 1;
        ++reached;
        queue.push_back(other);
      }
    }
  }
  if (reached != node_count_) {
    throw Error(ErrorCategory::invalid_input, "graph is not connected");
  }
}

Graph Graph::chain(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCategory::invalid_size, "chain needs at least 2 nodes");
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
  }
  return Graph(n, std::move(edges));
}

Graph Graph::grid(std::size_t height, std::size_t width) {
  if (height < 1 || width < 1 || height * width < 2) {
    throw Error(ErrorCategory::invalid_size,
                "grid needs at least two pixels");
  }
  std::vector<Edge> edges;
  edges.reserve(height * (width - 1) + (height - 1) * width);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const std::uint32_t id = static_cast<std::uint32_t>(r * width + c);
      if (c + 1 < width) edges.push_back({id, id + 1});
      if (r + 1 < height) {
        edges.push_back({id, id + static_cast<std::uint32_t>(width)});
      }
    }
  }
  return Graph(height * width, std::move(edges));
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : adjacency_) best = std::max(best, inc.size());
  return best;
}

}  // namespace circletik
