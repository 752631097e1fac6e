#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tdpoly/graph.hpp"
#include "tdpoly/polynomial.hpp"

namespace tdpoly {

inline constexpr std::size_t kDefaultEnumerationGuard = 30;
/// Hard ceiling imposed by the 64-bit subset masks of the kernel.
inline constexpr std::size_t kMaxEnumerationOrder = 62;

struct EnumerationOptions {
  std::size_t guard = kDefaultEnumerationGuard;
  /// Worker threads for the subset sweep; 0 means hardware concurrency.
  unsigned threads = 1;
};

/// counts[i] = number of total dominating sets of size i, for i = 0..order.
struct TdsCountVector {
  std::vector<std::uint64_t> counts;

  Polynomial to_polynomial() const;
  std::uint64_t total() const;
};

bool is_total_dominating(const Graph& g, const VertexSet& d);

/// Exhaustive count over all 2^order subsets. Throws GuardExceeded above the guard.
///
/// The empty graph has exactly one total dominating set, the empty set, so
/// its count vector is {1}. Every other graph has counts[0] = 0.
TdsCountVector dt_counts(const Graph& g, const EnumerationOptions& options = {});

/// D_t(G, x); zero iff G has an isolated vertex, 1 for the empty graph.
Polynomial dt_polynomial(const Graph& g, const EnumerationOptions& options = {});

/// Smallest total dominating set size. Throws NoTotalDominatingSet if G has
/// an isolated vertex.
std::size_t gamma_t(const Graph& g, const EnumerationOptions& options = {});

/// Generating polynomial of the sets D in V \ N[u] that totally dominate G \ u.
/// Vertices of G \ u keep their labels in G; the guard applies to order(G).
Polynomial p_u_polynomial(const Graph& g, Vertex u, const EnumerationOptions& options = {});

/// Kernel shared by the routines above: size-bucketed count of subsets of
/// `candidates` whose open neighborhood covers `target`. `adjacency[v]` is
/// the neighbor mask of v. Exposed for the reduction engine and benchmarks.
std::vector<std::uint64_t> count_covering_subsets(std::span<const std::uint64_t> adjacency,
                                                  std::uint64_t candidates, std::uint64_t target,
                                                  unsigned threads);

}  // namespace tdpoly
