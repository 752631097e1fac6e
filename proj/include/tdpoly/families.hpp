#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tdpoly/graph.hpp"

namespace tdpoly {

enum class Family {
  barbell,
  h3,
  friendship,
  tri_chain_t,
  tri_chain_g,
  para_q,
  para_q1,
  para_q2,
  para_qprime,
  para_qdelta,
  para_q_plus_e,
  ortho_o,
  ortho_o1,
  ortho_o2,
  ortho_odelta,
};

/// Whether a formula is evaluated exactly as typeset or in the form its
/// derivation actually supports.
enum class Fidelity { printed, derived };

/// All families, in a fixed order.
const std::vector<Family>& all_families();
/// CLI name: barbell, h3, f, t-chain, g-chain, q-chain, q1, q2, qprime,
/// qdelta, q-plus-e, o-chain, o1, o2, odelta.
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
std::string_view fidelity_name(Fidelity fidelity);
std::optional<Fidelity> parse_fidelity(std::string_view name);

/// Smallest n for which generate() accepts the family.
std::size_t min_n(Family family);

struct FamilySpec {
  Family family = Family::friendship;
  /// Chain length, copy count, clique size, or order of H.
  std::size_t n = 1;
  /// Cycle length, friendship graphs only.
  std::size_t q = 4;
  /// H for the h3 family; a path on n vertices when absent.
  std::optional<Graph> base;
  Fidelity fidelity = Fidelity::derived;
};

/// Canonical labeled instance. Throws FamilyError on invalid parameters.
///
/// Constructions:
///  - barbell: K_n on 0..n-1, K_n on n..2n-1, bridge (n-1, n).
///  - h3: H on 0..n-1; vertex v of H gets the path v - (n+2v) - (n+2v+1).
///  - f: n copies of C_q sharing vertex 0.
///  - t-chain: triangles {2i, 2i+1, 2i+2}, i < n; the tail is 2n.
///    g-chain adds a pendant vertex at the tail (G_0 = P_2).
///  - q-chain (para): 4-cycles a-b-c-d with a the shared vertex from the
///    previous square and c passed on, so cut vertices sit opposite. Q_0 = K_1.
///  - o-chain (ortho): same, but b is passed on, so cut vertices are adjacent.
///  - auxiliaries hang off the last square's outgoing vertex (the tail):
///    q1/o1 one pendant vertex, q2/o2 a pendant 2-path, qprime two pendant
///    vertices, qdelta/odelta a triangle; q-plus-e adds the chord b-d to
///    the last square.
Graph generate(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// H with a pendant 2-path attached at every vertex.
Graph h3_of(const Graph& h);

}  // namespace tdpoly
