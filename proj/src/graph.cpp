#include "tdpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace tdpoly {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Vertex>(i));
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v >= universe_) {
    throw GraphError("vertex " + std::to_string(v) + " outside set universe of size " +
                     std::to_string(universe_));
  }
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) throw GraphError("vertex sets over different universes");
}

bool VertexSet::contains(Vertex v) const {
  check(v);
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(order) + "-1");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

Graph Graph::from_edges(std::size_t order, std::initializer_list<Edge> edges) {
  return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check(Vertex v) const {
  if (v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " not in graph of order " +
                     std::to_string(order()));
  }
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check(v);
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::neighborhood(Vertex v, Closure closure) const {
  check(v);
  VertexSet s(order());
  for (Vertex w : adjacency_[v]) s.insert(w);
  if (closure == Closure::closed) s.insert(v);
  return s;
}

VertexSet Graph::neighborhood(const VertexSet& s, Closure closure) const {
  if (s.universe() != order()) throw GraphError("vertex set does not belong to this graph");
  VertexSet out(order());
  for (Vertex v : s.members()) {
    for (Vertex w : adjacency_[v]) out.insert(w);
  }
  if (closure == Closure::closed) out |= s;
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& nbrs) { return nbrs.empty(); });
}

Relabeled delete_vertices(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError("vertex set does not belong to this graph");
  std::vector<std::optional<Vertex>> map(g.order());
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) map[v] = next++;
  }
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    if (map[u] && map[v]) kept.emplace_back(*map[u], *map[v]);
  }
  return {Graph::from_edges(next, kept), std::move(map)};
}

Relabeled delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  }
  std::vector<Edge> kept;
  for (auto e : g.edges()) {
    if (e != Edge{std::min(u, v), std::max(u, v)}) kept.push_back(e);
  }
  std::vector<std::optional<Vertex>> map(g.order());
  for (Vertex w = 0; w < g.order(); ++w) map[w] = w;
  return {Graph::from_edges(g.order(), kept), std::move(map)};
}

Relabeled contract_vertex(const Graph& g, Vertex u) {
  auto nbrs = g.neighbors(u);
  std::vector<Edge> clique;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) clique.emplace_back(nbrs[i], nbrs[j]);
  }
  return delete_vertices(add_edges(g, clique), VertexSet(g.order(), {u}));
}

Graph add_edges(const Graph& g, std::span<const Edge> edges) {
  auto all = g.edges();
  all.insert(all.end(), edges.begin(), edges.end());
  return Graph::from_edges(g.order(), all);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

Attached point_attach(std::span<const Graph> parts, std::span<const Identification> steps) {
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) offset[p + 1] = offset[p] + parts[p].order();
  const std::size_t total = offset.back();

  // Union-find over global vertex indices; the root is always the smallest index.
  std::vector<std::size_t> root(total);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<std::size_t> part_root(parts.size());
  std::iota(part_root.begin(), part_root.end(), std::size_t{0});
  auto find_part = [&](std::size_t p) {
    while (part_root[p] != p) p = part_root[p] = part_root[part_root[p]];
    return p;
  };

  auto global = [&](const AttachPoint& a) {
    if (a.part >= parts.size()) {
      throw GraphError("identification references missing part " + std::to_string(a.part));
    }
    if (a.vertex >= parts[a.part].order()) {
      throw GraphError("identification references missing vertex " + std::to_string(a.vertex) +
                       " of part " + std::to_string(a.part));
    }
    return offset[a.part] + a.vertex;
  };

  for (const auto& step : steps) {
    auto x = global(step.first);
    auto y = global(step.second);
    auto px = find_part(step.first.part);
    auto py = find_part(step.second.part);
    if (px == py) {
      throw GraphError("identification joins vertices of an already merged component");
    }
    part_root[std::max(px, py)] = std::min(px, py);
    auto rx = find(x);
    auto ry = find(y);
    root[std::max(rx, ry)] = std::min(rx, ry);
  }

  std::vector<Vertex> label(total);
  Vertex next = 0;
  for (std::size_t x = 0; x < total; ++x) {
    if (find(x) == x) label[x] = next++;
  }
  for (std::size_t x = 0; x < total; ++x) label[x] = label[find(x)];

  Attached out;
  out.part_to_new.resize(parts.size());
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (Vertex v = 0; v < parts[p].order(); ++v) out.part_to_new[p].push_back(label[offset[p] + v]);
    for (auto [u, v] : parts[p].edges()) {
      auto a = label[offset[p] + u];
      auto b = label[offset[p] + v];
      if (a == b) throw GraphError("identification collapses an edge into a self-loop");
      edges.emplace_back(a, b);
    }
  }
  out.graph = Graph::from_edges(next, edges);
  return out;
}

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> image;
  std::vector<bool> used;

  bool extend(Vertex v) {
    if (v == g.order()) return true;
    for (Vertex w = 0; w < h.order(); ++w) {
      if (used[w] || g.degree(v) != h.degree(w)) continue;
      bool ok = true;
      for (Vertex prev = 0; prev < v && ok; ++prev) {
        ok = g.adjacent(v, prev) == h.adjacent(w, image[prev]);
      }
      if (!ok) continue;
      used[w] = true;
      image[v] = w;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool isomorphic_small(const Graph& g, const Graph& h) {
  auto larger = std::max(g.order(), h.order());
  if (larger > kIsomorphismGuard) {
    throw GuardExceeded("isomorphic_small", larger, kIsomorphismGuard);
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  IsoSearch search{g, h, std::vector<Vertex>(g.order()), std::vector<bool>(h.order(), false)};
  return search.extend(0);
}

}  // namespace tdpoly
