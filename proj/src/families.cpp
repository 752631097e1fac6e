#include "tdpoly/families.hpp"

#include <array>
#include <string>
#include <utility>

namespace tdpoly {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t min_n;
};

constexpr std::array<FamilyInfo, 15> kFamilies{{
    {Family::barbell, "barbell", 1},
    {Family::h3, "h3", 1},
    {Family::friendship, "f", 1},
    {Family::tri_chain_t, "t-chain", 1},
    {Family::tri_chain_g, "g-chain", 0},
    {Family::para_q, "q-chain", 0},
    {Family::para_q1, "q1", 0},
    {Family::para_q2, "q2", 0},
    {Family::para_qprime, "qprime", 0},
    {Family::para_qdelta, "qdelta", 0},
    {Family::para_q_plus_e, "q-plus-e", 1},
    {Family::ortho_o, "o-chain", 0},
    {Family::ortho_o1, "o1", 0},
    {Family::ortho_o2, "o2", 0},
    {Family::ortho_odelta, "odelta", 0},
}};

const FamilyInfo& info(Family family) {
  for (const auto& i : kFamilies) {
    if (i.family == family) return i;
  }
  throw FamilyError("unknown family");
}

// Vertices are appended as the chain grows; `tail` is where the next block
// or auxiliary attaches.
struct Builder {
  std::size_t order = 1;
  std::vector<Edge> edges;
  Vertex tail = 0;

  Vertex add() { return static_cast<Vertex>(order++); }
  void link(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  Graph build() const { return Graph::from_edges(order, edges); }
};

Builder triangle_chain(std::size_t n) {
  Builder b;
  for (std::size_t i = 0; i < n; ++i) {
    auto in = b.tail;
    auto mid = b.add();
    auto out = b.add();
    b.link(in, mid);
    b.link(mid, out);
    b.link(in, out);
    b.tail = out;
  }
  return b;
}

Builder square_chain(std::size_t n, bool ortho) {
  Builder b;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = b.tail;
    auto p = b.add();
    auto c = b.add();
    auto d = b.add();
    b.link(a, p);
    b.link(p, c);
    b.link(c, d);
    b.link(d, a);
    b.tail = ortho ? p : c;
  }
  return b;
}

enum class Hang { none, pendant, path2, two_pendants, triangle };

Graph hang(Builder b, Hang what) {
  auto t = b.tail;
  switch (what) {
    case Hang::none:
      break;
    case Hang::pendant:
      b.link(t, b.add());
      break;
    case Hang::path2: {
      auto p = b.add();
      b.link(t, p);
      b.link(p, b.add());
      break;
    }
    case Hang::two_pendants:
      b.link(t, b.add());
      b.link(t, b.add());
      break;
    case Hang::triangle: {
      auto p = b.add();
      auto r = b.add();
      b.link(t, p);
      b.link(t, r);
      b.link(p, r);
      break;
    }
  }
  return b.build();
}

Graph barbell(std::size_t n) {
  std::array<Graph, 3> parts{complete_graph(n), complete_graph(n), path_graph(2)};
  std::array<Identification, 2> steps{{
      {{0, static_cast<Vertex>(n - 1)}, {2, 0}},
      {{1, 0}, {2, 1}},
  }};
  return point_attach(parts, steps).graph;
}

Graph friendship(std::size_t n, std::size_t q) {
  std::vector<Graph> parts(n, cycle_graph(q));
  std::vector<Identification> steps;
  for (std::size_t i = 1; i < n; ++i) steps.push_back({{0, 0}, {i, 0}});
  return point_attach(parts, steps).graph;
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& i : kFamilies) out.push_back(i.family);
    return out;
  }();
  return families;
}

std::string_view family_name(Family family) { return info(family).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& i : kFamilies) {
    if (i.name == name) return i.family;
  }
  return std::nullopt;
}

std::string_view fidelity_name(Fidelity fidelity) {
  return fidelity == Fidelity::printed ? "printed" : "derived";
}

std::optional<Fidelity> parse_fidelity(std::string_view name) {
  if (name == "printed") return Fidelity::printed;
  if (name == "derived") return Fidelity::derived;
  return std::nullopt;
}

std::size_t min_n(Family family) { return info(family).min_n; }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw FamilyError("a cycle needs at least 3 vertices");
  auto edges = path_graph(n).edges();
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

Graph h3_of(const Graph& h) {
  std::vector<Graph> parts{h};
  std::vector<Identification> steps;
  for (Vertex v = 0; v < h.order(); ++v) {
    parts.push_back(path_graph(3));
    steps.push_back({{0, v}, {v + std::size_t{1}, 0}});
  }
  return point_attach(parts, steps).graph;
}

Graph generate(const FamilySpec& spec) {
  const auto& fi = info(spec.family);
  if (spec.n < fi.min_n) {
    throw FamilyError(std::string(fi.name) + " requires n >= " + std::to_string(fi.min_n));
  }
  const auto n = spec.n;
  switch (spec.family) {
    case Family::barbell:
      return barbell(n);
    case Family::h3:
      if (spec.base) {
        if (spec.base->order() != n) throw FamilyError("h3: n must equal the order of H");
        return h3_of(*spec.base);
      }
      return h3_of(path_graph(n));
    case Family::friendship:
      if (spec.q < 3) throw FamilyError("f requires q >= 3");
      return friendship(n, spec.q);
    case Family::tri_chain_t:
      return hang(triangle_chain(n), Hang::none);
    case Family::tri_chain_g:
      return hang(triangle_chain(n), Hang::pendant);
    case Family::para_q:
      return hang(square_chain(n, false), Hang::none);
    case Family::para_q1:
      return hang(square_chain(n, false), Hang::pendant);
    case Family::para_q2:
      return hang(square_chain(n, false), Hang::path2);
    case Family::para_qprime:
      return hang(square_chain(n, false), Hang::two_pendants);
    case Family::para_qdelta:
      return hang(square_chain(n, false), Hang::triangle);
    case Family::para_q_plus_e: {
      auto b = square_chain(n, false);
      // Last square occupies the three most recent vertices: b, c, d.
      auto last = static_cast<Vertex>(b.order - 1);
      b.link(last - 2, last);
      return b.build();
    }
    case Family::ortho_o:
      return hang(square_chain(n, true), Hang::none);
    case Family::ortho_o1:
      return hang(square_chain(n, true), Hang::pendant);
    case Family::ortho_o2:
      return hang(square_chain(n, true), Hang::path2);
    case Family::ortho_odelta:
      return hang(square_chain(n, true), Hang::triangle);
  }
  throw FamilyError("unknown family");
}

}  // namespace tdpoly
