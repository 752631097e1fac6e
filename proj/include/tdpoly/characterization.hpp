#pragma once

#include <optional>
#include <vector>

#include "tdpoly/graph.hpp"
#include "tdpoly/oracle.hpp"
#include "tdpoly/polynomial.hpp"

namespace tdpoly {

/// Decomposition of a graph as H(3): H plus a pendant 2-path per vertex.
struct RecognizedH3 {
  /// Induced subgraph on the H vertices, in ascending original order.
  Graph base;
  /// base_vertices[i]: original index of H's vertex i.
  std::vector<Vertex> base_vertices;
  /// paths[i] = (middle, leaf) of the 2-path hanging off H's vertex i.
  std::vector<std::pair<Vertex, Vertex>> paths;
};

std::optional<RecognizedH3> recognize_h3(const Graph& g);

struct TwoRootReport {
  /// D_t(G) equals x^{2n}(x+2)^n with n = order/3.
  bool polynomial_matches = false;
  /// recognize_h3 succeeded.
  bool recognized = false;
  bool iff_holds = false;
  Polynomial dt;
};

/// Evaluates both sides of "D_t(G) = x^{2n}(x+2)^n iff G = H(3)". Orders
/// not divisible by 3 make both sides false without enumerating.
TwoRootReport check_two_root_characterization(const Graph& g, const EnumerationOptions& oracle = {});

struct ConjectureVerdict {
  bool within = false;
  std::vector<Integer> roots;
  std::vector<Integer> violators;
};

/// Whether every integer root lies in {-3, -2, -1, 0}. Throws
/// std::domain_error for the zero polynomial.
ConjectureVerdict conjecture_membership(const Polynomial& p);

}  // namespace tdpoly
