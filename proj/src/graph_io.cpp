#include "sosperfect/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sosperfect {

namespace {

// Next non-empty line with comments stripped; false at EOF.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("edge list: missing header");
  long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
      throw std::invalid_argument("edge list: header must be 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) {
    if (!next_content_line(in, line)) throw std::invalid_argument("edge list: fewer edges than declared");
    std::istringstream es(line);
    long i, j;
    std::string extra;
    if (!(es >> i >> j) || (es >> extra)) throw std::invalid_argument("edge list: malformed edge line '" + line + "'");
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("edge list: vertex out of range");
    if (i == j) throw std::invalid_argument("edge list: self-loop");
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (next_content_line(in, line)) throw std::invalid_argument("edge list: more edges than declared");
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
}

}  // namespace sosperfect
