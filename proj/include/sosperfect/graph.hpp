#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sosperfect/errors.hpp"

namespace sosperfect {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-width bit set over {0..n-1}; one row of the adjacency structure.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void fill();
  bool empty() const;
  int count() const;
  /// Smallest member, or -1.
  int first() const;
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  /// this &= ~o
  VertexSet& subtract(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  bool operator==(const VertexSet& o) const = default;

  std::vector<int> members() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Holds both bitset rows (used by the clique and colouring searches) and a
/// dense 0/1 adjacency matrix (used by the linear algebra); both are built
/// once in the constructor.
class Graph {
 public:
  Graph() : Graph(0, {}) {}
  /// Duplicate edges collapse; self-loops or out-of-range endpoints throw
  /// std::invalid_argument.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  /// Edges (i, j) with i < j, sorted row-major.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbours(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return degrees_[v]; }
  int max_degree() const;
  int min_degree() const;
  const Eigen::MatrixXd& adjacency() const { return adjacency_; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
  Eigen::MatrixXd adjacency_;
};

Graph complement(const Graph& g);
/// Vertex i of the result is s[i] of g. Throws on empty, repeated or
/// out-of-range s.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Vertices of g1 keep their labels; vertex j of g2 becomes n1 + j.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Vertex (a1, a2) is labelled a1 * n2 + a2.
Graph strong_product(const Graph& g1, const Graph& g2);
/// Appends a clone of v (label n) adjacent to v and to N(v).
Graph replicate_vertex(const Graph& g, Vertex v);
/// Vertices v_0..v_{n-1} keep labels, u_i = n + i, w = 2n.
Graph mycielskian(const Graph& g);

/// perm[i] is the new label of vertex i.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Canonical code for small graphs (n <= 10): lexicographically largest
/// upper-triangle adjacency string over all relabellings that respect the
/// equitable partition.
/// Two graphs are isomorphic iff their codes are equal.
std::string canonical_code(const Graph& g);
/// The graph whose canonical labelling produced `code` (inverse of
/// canonical_code up to isomorphism).
Graph graph_from_canonical_code(const std::string& code);
bool is_isomorphic(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
/// Vertex lists of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
/// Two-colouring (side[v] in {0,1}) if g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace sosperfect
