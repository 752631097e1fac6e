#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdpoly/graph.hpp"
#include "tdpoly/oracle.hpp"
#include "tdpoly/polynomial.hpp"

namespace tdpoly {

// Decomposition identities for D_t at a pivot vertex u (and a partner v):
//
//   (i)   any u:
//         D(G) = D(G-u) + x D(G/u) + x^2 sum_{v in N(u)} D(G - N[{u,v}]) - (1+x) p_u(G)
//   (ii)  u, v non-adjacent, N(v) subset of N(u):
//         D(G) = D(G-u) + x D(G/u) + x^2 sum_{w in N(u) & N(v)} D(G - N[{u,w}])
//   (iii) N[v] subset of N[u]:
//         D(G) = D(G-u) + x D(G/u) + x^2 sum_{w in N(u)} D(G - N[{u,w}])
//   (iv)  uv an edge, N[u] = N[v]:
//         D(G) = D(G - uv) + x^2 D(G - N[u])
//
// D of the empty graph is 1 (the empty set dominates nothing, and nothing
// needs dominating); the sums above rely on it.

enum class IdentityPart { i, ii, iii, iv };

std::string_view to_string(IdentityPart part);

bool identity_applies(const Graph& g, IdentityPart part, Vertex u, std::optional<Vertex> v);

/// One summand of an identity's right-hand side: coefficient times either
/// D_t of a subgraph or a directly computed polynomial (the p_u correction).
struct IdentityTerm {
  Polynomial coefficient;
  std::optional<Graph> subgraph;
  Polynomial leaf;
  std::string label;
};

/// Right-hand side terms of an identity. Throws PreconditionError when the
/// pivots violate the identity's hypotheses. p_u leaves use the oracle.
std::vector<IdentityTerm> expand_identity(const Graph& g, IdentityPart part, Vertex u,
                                          std::optional<Vertex> v,
                                          const EnumerationOptions& oracle = {});

struct IdentityCheck {
  bool holds = false;
  Polynomial lhs;
  Polynomial rhs;
};

/// Both sides by enumeration. GuardExceeded if any graph involved is too large.
IdentityCheck check_identity_i(const Graph& g, Vertex u, const EnumerationOptions& oracle = {});
IdentityCheck check_identity_ii(const Graph& g, Vertex u, Vertex v, const EnumerationOptions& oracle = {});
IdentityCheck check_identity_iii(const Graph& g, Vertex u, Vertex v, const EnumerationOptions& oracle = {});
IdentityCheck check_identity_iv(const Graph& g, Vertex u, Vertex v, const EnumerationOptions& oracle = {});
IdentityCheck check_identity(const Graph& g, IdentityPart part, Vertex u, std::optional<Vertex> v,
                             const EnumerationOptions& oracle = {});

enum class StepKind { empty_graph, isolated_vertex, base, identity };

struct TraceTerm {
  Polynomial coefficient;
  /// Index of the step that produced the value, or empty for a leaf.
  std::optional<std::size_t> child;
  Polynomial value;
  std::string label;
};

struct ReductionStep {
  StepKind kind = StepKind::base;
  std::size_t order = 0;
  std::optional<IdentityPart> part;
  std::optional<Vertex> u;
  std::optional<Vertex> v;
  std::vector<TraceTerm> terms;
  Polynomial result;
};

/// Steps in post-order: every child index is smaller than its parent's.
/// Memoized subproblems are referenced again rather than re-recorded.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial result;
  std::size_t memo_hits = 0;

  /// Recomputes every identity step from its terms and checks the final result.
  bool replay() const;
  std::string render() const;
};

struct ReductionOptions {
  std::size_t ceiling = 20;
  /// Subgraphs of at most this order go straight to the oracle.
  std::size_t base_order = 4;
  EnumerationOptions oracle;
};

struct ReductionResult {
  Polynomial polynomial;
  ReductionTrace trace;
};

/// D_t by recursive application of the identities, memoized on the labeled
/// subgraph. Pivot choice: first (iv) edge, then (iii) pair, then (ii) pair in
/// index order; otherwise (i) at a maximum-degree vertex (lowest index on ties).
ReductionResult dt_via_reduction(const Graph& g, const ReductionOptions& options = {});

}  // namespace tdpoly
