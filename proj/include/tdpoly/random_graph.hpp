#pragma once

#include <cstdint>
#include <random>

#include "tdpoly/graph.hpp"

namespace tdpoly {

/// Seeded G(n, 1/2) sampler. Draws are taken straight from the engine
/// (no std distributions), so a seed yields the same graphs on every platform.
class GraphSampler {
 public:
  explicit GraphSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform order in [min_order, max_order], each edge with probability 1/2.
  Graph any(std::size_t min_order, std::size_t max_order);
  /// As any(), rejecting samples with an isolated vertex. min_order >= 2.
  Graph isolated_free(std::size_t min_order, std::size_t max_order);
  /// As isolated_free(), additionally rejecting disconnected samples.
  Graph connected(std::size_t min_order, std::size_t max_order);

  std::uint64_t next() { return engine_(); }

 private:
  std::size_t order_in(std::size_t lo, std::size_t hi);

  std::mt19937_64 engine_;
};

bool is_connected(const Graph& g);

}  // namespace tdpoly
