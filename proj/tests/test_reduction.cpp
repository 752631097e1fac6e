#include <doctest.h>

#include "naive_oracle.hpp"
#include "tdpoly/families.hpp"
#include "tdpoly/random_graph.hpp"
#include "tdpoly/reduction.hpp"

using namespace tdpoly;

TEST_CASE("hypotheses") {
  auto p = path_graph(4);
  // Ends of P_4: N(0) = {1} is inside N(2) = {1,3}, and 0, 2 are non-adjacent.
  CHECK(identity_applies(p, IdentityPart::ii, 2, 0));
  CHECK_FALSE(identity_applies(p, IdentityPart::ii, 0, 2));
  // N[0] = {0,1} is inside N[1] = {0,1,2}.
  CHECK(identity_applies(p, IdentityPart::iii, 1, 0));
  CHECK_FALSE(identity_applies(p, IdentityPart::iv, 0, 1));
  auto k = complete_graph(3);
  CHECK(identity_applies(k, IdentityPart::iv, 0, 1));
  CHECK(identity_applies(k, IdentityPart::i, 0, std::nullopt));
  CHECK_THROWS_AS(expand_identity(p, IdentityPart::iv, 0, 1), PreconditionError);
  CHECK_THROWS_AS(expand_identity(p, IdentityPart::ii, 0, std::nullopt), PreconditionError);
}

TEST_CASE("identity (i) keeps the p_u correction") {
  auto c = check_identity_i(cycle_graph(4), 0);
  CHECK(c.holds);
  CHECK(c.lhs == Polynomial{0, 0, 4, 4, 1});
  // A graph where p_u is nonzero: P_4 at an end.
  auto p = check_identity_i(path_graph(4), 0);
  CHECK(p.holds);
  auto terms = expand_identity(path_graph(4), IdentityPart::i, 0, std::nullopt);
  bool saw_pu = false;
  for (const auto& t : terms) saw_pu = saw_pu || (!t.subgraph && !t.leaf.is_zero());
  CHECK(saw_pu);
}

TEST_CASE("all identities on random graphs") {
  GraphSampler sampler(321);
  std::size_t checked = 0;
  for (int s = 0; s < 80; ++s) {
    auto g = sampler.isolated_free(2, 7);
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
      CHECK(check_identity_i(g, u).holds);
      ++checked;
      for (Vertex v = 0; v < n; ++v) {
        for (auto part : {IdentityPart::ii, IdentityPart::iii, IdentityPart::iv}) {
          if (!identity_applies(g, part, u, v)) continue;
          auto c = check_identity(g, part, u, v);
          CAPTURE(s);
          CAPTURE(u);
          CAPTURE(v);
          CHECK(c.holds);
          CHECK(c.lhs == naive::dt(g));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("reduction engine matches enumeration") {
  GraphSampler sampler(77);
  for (int s = 0; s < 60; ++s) {
    auto g = sampler.isolated_free(4, 9);
    auto r = dt_via_reduction(g);
    CAPTURE(s);
    CHECK(r.polynomial == naive::dt(g));
    CHECK(r.trace.replay());
    CHECK(r.trace.result == r.polynomial);
  }
}

TEST_CASE("reduction handles isolated vertices, the empty graph and the ceiling") {
  CHECK(dt_via_reduction(Graph(0)).polynomial == Polynomial{1});
  CHECK(dt_via_reduction(disjoint_union(cycle_graph(5), Graph(1))).polynomial.is_zero());
  CHECK_THROWS_AS(dt_via_reduction(path_graph(21)), GuardExceeded);
  ReductionOptions small;
  small.ceiling = 5;
  CHECK_THROWS_AS(dt_via_reduction(path_graph(6), small), GuardExceeded);
}

TEST_CASE("trace structure") {
  ReductionOptions opt;
  opt.base_order = 2;
  auto r = dt_via_reduction(generate({Family::ortho_o, 2}), opt);
  REQUIRE_FALSE(r.trace.steps.empty());
  for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
    for (const auto& t : r.trace.steps[i].terms) {
      if (t.child) CHECK(*t.child < i);
    }
  }
  CHECK(r.trace.steps.back().kind == StepKind::identity);
  CHECK(r.trace.render().find("apply") != std::string::npos);

  // Tampering with a recorded value is caught by replay.
  auto broken = r.trace;
  broken.steps.back().result += Polynomial{1};
  CHECK_FALSE(broken.replay());
}
