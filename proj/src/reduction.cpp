#include "tdpoly/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tdpoly {

namespace {

const Polynomial kOne{1};
const Polynomial kX{0, 1};
const Polynomial kXSquared{0, 0, 1};

Graph minus_closed_pair(const Graph& g, Vertex u, Vertex w) {
  auto s = g.neighborhood(u, Closure::closed) | g.neighborhood(w, Closure::closed);
  return delete_vertices(g, s).graph;
}

std::string pair_label(const char* prefix, Vertex u, Vertex w) {
  return std::string(prefix) + "{" + std::to_string(u) + "," + std::to_string(w) + "}]";
}

void require(bool ok, IdentityPart part, Vertex u, std::optional<Vertex> v) {
  if (ok) return;
  std::ostringstream msg;
  msg << "identity (" << to_string(part) << ") does not apply at u=" << u;
  if (v) msg << ", v=" << *v;
  throw PreconditionError(msg.str());
}

}  // namespace

std::string_view to_string(IdentityPart part) {
  switch (part) {
    case IdentityPart::i:
      return "i";
    case IdentityPart::ii:
      return "ii";
    case IdentityPart::iii:
      return "iii";
    case IdentityPart::iv:
      return "iv";
  }
  return "?";
}

bool identity_applies(const Graph& g, IdentityPart part, Vertex u, std::optional<Vertex> v) {
  if (u >= g.order()) return false;
  if (part == IdentityPart::i) return true;
  if (!v || *v >= g.order() || *v == u) return false;
  switch (part) {
    case IdentityPart::ii:
      return !g.adjacent(u, *v) &&
             g.neighborhood(*v, Closure::open).is_subset_of(g.neighborhood(u, Closure::open));
    case IdentityPart::iii:
      return g.neighborhood(*v, Closure::closed).is_subset_of(g.neighborhood(u, Closure::closed));
    case IdentityPart::iv:
      return g.adjacent(u, *v) &&
             g.neighborhood(*v, Closure::closed) == g.neighborhood(u, Closure::closed);
    default:
      return false;
  }
}

std::vector<IdentityTerm> expand_identity(const Graph& g, IdentityPart part, Vertex u,
                                          std::optional<Vertex> v, const EnumerationOptions& oracle) {
  require(identity_applies(g, part, u, v), part, u, v);
  std::vector<IdentityTerm> terms;

  if (part == IdentityPart::iv) {
    terms.push_back({kOne, delete_edge(g, u, *v).graph, {}, "G-e"});
    terms.push_back({kXSquared, delete_vertices(g, g.neighborhood(u, Closure::closed)).graph, {},
                     "G-N[" + std::to_string(u) + "]"});
    return terms;
  }

  terms.push_back({kOne, delete_vertices(g, VertexSet(g.order(), {u})).graph, {}, "G-u"});
  terms.push_back({kX, contract_vertex(g, u).graph, {}, "G/u"});

  std::vector<Vertex> partners;
  for (Vertex w : g.neighbors(u)) {
    if (part != IdentityPart::ii || g.adjacent(*v, w)) partners.push_back(w);
  }
  for (Vertex w : partners) {
    terms.push_back({kXSquared, minus_closed_pair(g, u, w), {}, pair_label("G-N[", u, w)});
  }

  if (part == IdentityPart::i) {
    terms.push_back({-(kOne + kX), std::nullopt, p_u_polynomial(g, u, oracle), "p_u"});
  }
  return terms;
}

IdentityCheck check_identity(const Graph& g, IdentityPart part, Vertex u, std::optional<Vertex> v,
                             const EnumerationOptions& oracle) {
  auto terms = expand_identity(g, part, u, v, oracle);
  IdentityCheck check;
  check.lhs = dt_polynomial(g, oracle);
  for (const auto& t : terms) {
    check.rhs += t.coefficient * (t.subgraph ? dt_polynomial(*t.subgraph, oracle) : t.leaf);
  }
  check.holds = check.lhs == check.rhs;
  return check;
}

IdentityCheck check_identity_i(const Graph& g, Vertex u, const EnumerationOptions& oracle) {
  return check_identity(g, IdentityPart::i, u, std::nullopt, oracle);
}

IdentityCheck check_identity_ii(const Graph& g, Vertex u, Vertex v, const EnumerationOptions& oracle) {
  return check_identity(g, IdentityPart::ii, u, v, oracle);
}

IdentityCheck check_identity_iii(const Graph& g, Vertex u, Vertex v, const EnumerationOptions& oracle) {
  return check_identity(g, IdentityPart::iii, u, v, oracle);
}

IdentityCheck check_identity_iv(const Graph& g, Vertex u, Vertex v, const EnumerationOptions& oracle) {
  return check_identity(g, IdentityPart::iv, u, v, oracle);
}

namespace {

struct Pivot {
  IdentityPart part;
  Vertex u;
  std::optional<Vertex> v;
};

Pivot choose_pivot(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && identity_applies(g, IdentityPart::iv, u, v)) return {IdentityPart::iv, u, v};
    }
  }
  for (auto part : {IdentityPart::iii, IdentityPart::ii}) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (identity_applies(g, part, u, v)) return {part, u, v};
      }
    }
  }
  Vertex best = 0;
  for (Vertex u = 1; u < n; ++u) {
    if (g.degree(u) > g.degree(best)) best = u;
  }
  return {IdentityPart::i, best, std::nullopt};
}

std::vector<Vertex> memo_key(const Graph& g) {
  std::vector<Vertex> key{static_cast<Vertex>(g.order())};
  for (auto [a, b] : g.edges()) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

class Reducer {
 public:
  explicit Reducer(const ReductionOptions& options) : options_(options) {}

  std::size_t solve(const Graph& g) {
    auto key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++trace_.memo_hits;
      return it->second;
    }
    ReductionStep step;
    step.order = g.order();
    if (g.order() == 0) {
      step.kind = StepKind::empty_graph;
      step.result = kOne;
    } else if (g.has_isolated_vertex()) {
      step.kind = StepKind::isolated_vertex;
    } else if (g.order() <= options_.base_order) {
      step.kind = StepKind::base;
      step.result = dt_polynomial(g, options_.oracle);
    } else {
      auto pivot = choose_pivot(g);
      step.kind = StepKind::identity;
      step.part = pivot.part;
      step.u = pivot.u;
      step.v = pivot.v;
      for (auto& term : expand_identity(g, pivot.part, pivot.u, pivot.v, options_.oracle)) {
        TraceTerm t{term.coefficient, std::nullopt, term.leaf, term.label};
        if (term.subgraph) {
          t.child = solve(*term.subgraph);
          t.value = trace_.steps[*t.child].result;
        }
        step.result += t.coefficient * t.value;
        step.terms.push_back(std::move(t));
      }
    }
    trace_.steps.push_back(std::move(step));
    auto index = trace_.steps.size() - 1;
    memo_.emplace(std::move(key), index);
    return index;
  }

  ReductionTrace take(std::size_t root) {
    trace_.result = trace_.steps[root].result;
    return std::move(trace_);
  }

 private:
  const ReductionOptions& options_;
  ReductionTrace trace_;
  std::map<std::vector<Vertex>, std::size_t> memo_;
};

}  // namespace

ReductionResult dt_via_reduction(const Graph& g, const ReductionOptions& options) {
  if (g.order() > options.ceiling) throw GuardExceeded("dt_via_reduction", g.order(), options.ceiling);
  Reducer reducer(options);
  auto root = reducer.solve(g);
  auto trace = reducer.take(root);
  auto result = trace.result;
  return {std::move(result), std::move(trace)};
}

bool ReductionTrace::replay() const {
  if (steps.empty()) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    if (step.kind != StepKind::identity) continue;
    Polynomial sum;
    for (const auto& t : step.terms) {
      if (t.child) {
        if (*t.child >= i || steps[*t.child].result != t.value) return false;
      }
      sum += t.coefficient * t.value;
    }
    if (sum != step.result) return false;
  }
  // Post-order puts the top-level call last.
  return steps.back().result == result;
}

std::string ReductionTrace::render() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out << '#' << i << " [order " << s.order << "] ";
    switch (s.kind) {
      case StepKind::empty_graph:
        out << "empty graph";
        break;
      case StepKind::isolated_vertex:
        out << "isolated vertex";
        break;
      case StepKind::base:
        out << "base case by enumeration";
        break;
      case StepKind::identity: {
        out << "apply (" << to_string(*s.part) << ") at u=" << *s.u;
        if (s.v) out << ",v=" << *s.v;
        out << " -> subproblems";
        for (const auto& t : s.terms) {
          out << ' ';
          if (t.child) {
            out << '#' << *t.child;
          } else {
            out << t.label << '=' << to_human_string(t.value);
          }
        }
        break;
      }
    }
    out << " => " << to_human_string(s.result) << '\n';
  }
  out << "result: " << to_human_string(result) << " (" << steps.size() << " steps, " << memo_hits
      << " memo hits)\n";
  return out.str();
}

}  // namespace tdpoly
