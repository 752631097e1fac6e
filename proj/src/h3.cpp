#include "tdpoly/characterization.hpp"

#include "tdpoly/recurrences.hpp"

namespace tdpoly {

namespace {

enum class Role { unassigned, base, middle, leaf };

}  // namespace

std::optional<RecognizedH3> recognize_h3(const Graph& g) {
  const auto order = g.order();
  if (order % 3 != 0) return std::nullopt;

  std::vector<Role> role(order, Role::unassigned);
  std::vector<std::optional<std::pair<Vertex, Vertex>>> path_of(order);

  // Every leaf is either the end of a pendant path or, when H has an
  // isolated vertex, the H end of a P_3 component; in the latter case the
  // lower-indexed end is taken as the path leaf.
  for (Vertex leaf = 0; leaf < order; ++leaf) {
    if (g.degree(leaf) != 1 || role[leaf] != Role::unassigned) continue;
    const Vertex middle = g.neighbors(leaf)[0];
    if (g.degree(middle) != 2 || role[middle] != Role::unassigned) return std::nullopt;
    const auto nbrs = g.neighbors(middle);
    const Vertex anchor = nbrs[0] == leaf ? nbrs[1] : nbrs[0];
    if (role[anchor] != Role::unassigned) return std::nullopt;
    role[leaf] = Role::leaf;
    role[middle] = Role::middle;
    role[anchor] = Role::base;
    path_of[anchor] = std::pair{middle, leaf};
  }

  RecognizedH3 out;
  VertexSet removed(order);
  for (Vertex v = 0; v < order; ++v) {
    if (role[v] == Role::unassigned) return std::nullopt;
    if (role[v] == Role::base) {
      out.base_vertices.push_back(v);
      out.paths.push_back(*path_of[v]);
    } else {
      removed.insert(v);
    }
  }
  if (out.base_vertices.size() * 3 != order) return std::nullopt;
  out.base = delete_vertices(g, removed).graph;
  return out;
}

TwoRootReport check_two_root_characterization(const Graph& g, const EnumerationOptions& oracle) {
  TwoRootReport report;
  if (g.order() % 3 != 0) {
    report.iff_holds = true;
    return report;
  }
  report.dt = dt_polynomial(g, oracle);
  report.polynomial_matches = report.dt == dt_closed_h3(g.order() / 3);
  report.recognized = recognize_h3(g).has_value();
  report.iff_holds = report.polynomial_matches == report.recognized;
  return report;
}

ConjectureVerdict conjecture_membership(const Polynomial& p) {
  ConjectureVerdict verdict;
  verdict.roots = integer_roots(p);
  for (const auto& r : verdict.roots) {
    if (r < -3 || r > 0) verdict.violators.push_back(r);
  }
  verdict.within = verdict.violators.empty();
  return verdict;
}

}  // namespace tdpoly
