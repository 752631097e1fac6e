#include "tdpoly/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace tdpoly {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw GraphError("edge list line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
void parse_pair(const std::string& line, std::size_t line_no, T& a, T& b) {
  std::istringstream fields(line);
  long long x = 0;
  long long y = 0;
  std::string extra;
  if (!(fields >> x >> y)) fail(line_no, "expected two integers");
  if (fields >> extra) fail(line_no, "unexpected trailing token '" + extra + "'");
  if (x < 0 || y < 0) fail(line_no, "negative value");
  a = static_cast<T>(x);
  b = static_cast<T>(y);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw GraphError("edge list is empty");
  std::size_t order = 0;
  std::size_t m = 0;
  parse_pair(line, line_no, order, m);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no)) {
      throw GraphError("edge list ended after " + std::to_string(i) + " of " +
                       std::to_string(m) + " edges");
    }
    Vertex u = 0;
    Vertex v = 0;
    parse_pair(line, line_no, u, v);
    edges.emplace_back(u, v);
  }
  if (next_data_line(in, line, line_no)) fail(line_no, "more edges than the header declares");
  return Graph::from_edges(order, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace tdpoly
