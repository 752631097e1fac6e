#pragma once

#include <iosfwd>

#include "tdpoly/graph.hpp"

namespace tdpoly {

// Edge-list text format:
//   # comment lines start with '#'
//   n m
//   u v      (m lines, 0-based endpoints)
// Tokens are whitespace separated; blank lines are ignored.

/// Throws GraphError on malformed input, a wrong edge count, or invalid edges.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tdpoly
