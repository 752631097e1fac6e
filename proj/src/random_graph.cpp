#include "tdpoly/random_graph.hpp"

#include <stdexcept>
#include <vector>

namespace tdpoly {

std::size_t GraphSampler::order_in(std::size_t lo, std::size_t hi) {
  if (lo > hi) throw std::invalid_argument("empty order range");
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

Graph GraphSampler::any(std::size_t min_order, std::size_t max_order) {
  const auto n = order_in(min_order, max_order);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (engine_() >> 63) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph GraphSampler::isolated_free(std::size_t min_order, std::size_t max_order) {
  if (max_order < 2) throw std::invalid_argument("isolated-free graphs need order >= 2");
  if (min_order < 2) min_order = 2;
  for (;;) {
    auto g = any(min_order, max_order);
    if (!g.has_isolated_vertex()) return g;
  }
}

Graph GraphSampler::connected(std::size_t min_order, std::size_t max_order) {
  for (;;) {
    auto g = isolated_free(min_order, max_order);
    if (is_connected(g)) return g;
  }
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

}  // namespace tdpoly
