#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tdpoly/errors.hpp"

namespace tdpoly {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of the vertices 0..universe-1 of some graph, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::vector<Vertex> members() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  bool operator==(const VertexSet&) const = default;

 private:
  void check(Vertex v) const;
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class Closure { open, closed };

/// Labeled simple undirected graph on vertices 0..order-1.
///
/// Adjacency lists are kept sorted, which makes labeled equality and the
/// edge listing deterministic. Instances are immutable once built; every
/// surgery below returns a new graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of the given order.
  explicit Graph(std::size_t order);

  /// Throws GraphError on a self-loop or an out-of-range endpoint.
  /// Duplicate edges (in either orientation) are collapsed.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);
  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  VertexSet neighborhood(Vertex v, Closure closure) const;
  VertexSet neighborhood(const VertexSet& s, Closure closure) const;
  bool has_isolated_vertex() const;

  bool operator==(const Graph&) const = default;

 private:
  void check(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
};

/// Result of a surgery: the new graph plus where each old vertex went.
/// old_to_new[v] is empty for deleted vertices.
struct Relabeled {
  Graph graph;
  std::vector<std::optional<Vertex>> old_to_new;
};

/// Induced subgraph on V \ s; survivors keep their relative order.
Relabeled delete_vertices(const Graph& g, const VertexSet& s);
/// Throws GraphError if (u, v) is not an edge.
Relabeled delete_edge(const Graph& g, Vertex u, Vertex v);
/// G/u: make N(u) a clique, then delete u.
Relabeled contract_vertex(const Graph& g, Vertex u);
/// Same vertex set with extra edges; throws on self-loops.
Graph add_edges(const Graph& g, std::span<const Edge> edges);
Graph disjoint_union(const Graph& a, const Graph& b);

/// A vertex of one of the parts handed to point_attach.
struct AttachPoint {
  std::size_t part;
  Vertex vertex;
};

struct Identification {
  AttachPoint first;
  AttachPoint second;
};

struct Attached {
  Graph graph;
  /// part_to_new[p][v]: index in the result of vertex v of part p.
  std::vector<std::vector<Vertex>> part_to_new;
};

/// Identifies vertex pairs across parts, one step at a time.
///
/// Each step must join two parts that are not yet connected by earlier
/// steps, so the identifications form a tree over the parts. The result is
/// relabeled by first appearance in the disjoint union of the parts; a
/// merged vertex takes the position of its earliest member.
Attached point_attach(std::span<const Graph> parts, std::span<const Identification> steps);

inline constexpr std::size_t kIsomorphismGuard = 10;

/// Brute-force isomorphism test for desk-scale graphs (order <= 10).
bool isomorphic_small(const Graph& g, const Graph& h);

}  // namespace tdpoly
