#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "sosperfect/generators.hpp"
#include "sosperfect/graph.hpp"

using namespace sosperfect;

namespace {

// Independent isomorphism check: try every permutation (n <= 8).
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(VertexSet, Basics) {
  VertexSet s(130);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.first(), -1);
  s.set(3);
  s.set(64);
  s.set(129);
  EXPECT_EQ(s.count(), 3);
  EXPECT_EQ(s.first(), 3);
  EXPECT_EQ(s.next(3), 64);
  EXPECT_EQ(s.next(64), 129);
  EXPECT_EQ(s.next(129), -1);
  s.reset(64);
  EXPECT_EQ(s.members(), (std::vector<int>{3, 129}));
  VertexSet t(130);
  t.fill();
  EXPECT_EQ(t.count(), 130);
  t.subtract(s);
  EXPECT_EQ(t.count(), 128);
  EXPECT_TRUE((t & s).empty());
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Graph, AdjacencySymmetricZeroDiagonal) {
  for (const Graph& g : fixtures::random_corpus(30, 1, 15, 7)) {
    const auto& A = g.adjacency();
    EXPECT_EQ(A, A.transpose());
    EXPECT_EQ(A.diagonal().cwiseAbs().sum(), 0.0);
    EXPECT_EQ(A.sum(), 2.0 * g.size());
  }
}

TEST(Graph, ComplementIdentity) {
  for (const Graph& g : fixtures::random_corpus(40, 1, 14, 11)) {
    const int n = g.order();
    Graph c = complement(g);
    Eigen::MatrixXd total = g.adjacency() + c.adjacency() + Eigen::MatrixXd::Identity(n, n);
    EXPECT_EQ(total, Eigen::MatrixXd::Ones(n, n));
    EXPECT_EQ(complement(c), g);
    EXPECT_EQ(g.size() + c.size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(Graph, ComplementExamples) {
  EXPECT_TRUE(is_isomorphic(complement(cycle(5)), cycle(5)));
  EXPECT_EQ(complement(complete(6)), empty_graph(6));
  // Complement of P3 is one edge plus an isolated vertex.
  EXPECT_EQ(complement(path(3)), Graph(3, {{0, 2}}));
}

TEST(Graph, InducedSubgraph) {
  const std::vector<int> s{0, 1, 2};
  EXPECT_EQ(induced_subgraph(cycle(5), s), path(3));
  Graph g = fixtures::c5_with_triangle();
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(induced_subgraph(g, all), g);
  const std::vector<int> five{0, 1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(fixtures::fourteen_vertex_extension(), five), cycle(5));
  EXPECT_THROW(induced_subgraph(g, std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(induced_subgraph(g, std::vector<int>{0, 6}), std::invalid_argument);
  EXPECT_THROW(induced_subgraph(g, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST(Graph, InducedSubgraphMatchesDefinition) {
  SplitMix64 rng(5);
  for (const Graph& g : fixtures::random_corpus(20, 3, 12, 3)) {
    std::vector<int> s;
    for (int v = 0; v < g.order(); ++v)
      if (rng.uniform() < 0.6) s.push_back(v);
    if (s.empty()) s.push_back(0);
    Graph h = induced_subgraph(g, s);
    ASSERT_EQ(h.order(), static_cast<int>(s.size()));
    for (int a = 0; a < h.order(); ++a)
      for (int b = 0; b < h.order(); ++b)
        if (a != b) EXPECT_EQ(h.adjacent(a, b), g.adjacent(s[a], s[b]));
  }
}

TEST(Graph, Join) {
  Graph g = join(cycle(5), complete(2));
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 5u + 1u + 10u);
  EXPECT_EQ(join(empty_graph(1), empty_graph(1)), complete(2));
  for (int v = 0; v < 5; ++v) {
    EXPECT_TRUE(g.adjacent(v, 5));
    EXPECT_TRUE(g.adjacent(v, 6));
  }
}

TEST(Graph, StrongProductMatchesRule) {
  auto corpus = fixtures::random_corpus(8, 1, 5, 21);
  corpus.push_back(cycle(5));
  corpus.push_back(complete(2));
  for (const Graph& a : corpus)
    for (const Graph& b : corpus) {
      Graph p = strong_product(a, b);
      const int n2 = b.order();
      ASSERT_EQ(p.order(), a.order() * n2);
      for (int x = 0; x < p.order(); ++x)
        for (int y = x + 1; y < p.order(); ++y) {
          const int a1 = x / n2, a2 = x % n2, b1 = y / n2, b2 = y % n2;
          const bool expected = (a1 == b1 && b.adjacent(a2, b2)) || (a2 == b2 && a.adjacent(a1, b1)) ||
                                (a.adjacent(a1, b1) && b.adjacent(a2, b2));
          EXPECT_EQ(p.adjacent(x, y), expected);
        }
    }
  Graph fig = strong_product(cycle(5), complete(2));
  EXPECT_EQ(fig.order(), 10);
  EXPECT_EQ(fig.size(), 25u);
  EXPECT_EQ(strong_product(fixtures::c5_with_triangle(), complete(1)), fixtures::c5_with_triangle());
}

TEST(Graph, ReplicateVertex) {
  EXPECT_EQ(replicate_vertex(complete(1), 0), complete(2));
  Graph r = replicate_vertex(cycle(5), 0);
  EXPECT_EQ(r.degree(5), 3);
  EXPECT_THROW(replicate_vertex(cycle(5), 5), std::invalid_argument);
  Graph right = replicate_vertex(fixtures::seven_vertex_graph(), 1);
  EXPECT_EQ(right.order(), 8);
  EXPECT_EQ(right.degree(7), fixtures::seven_vertex_graph().degree(1) + 1);
}

TEST(Graph, Mycielskian) {
  EXPECT_TRUE(is_isomorphic(mycielskian(complete(2)), cycle(5)));
  Graph m4 = mycielskian(cycle(5));
  EXPECT_EQ(m4.order(), 11);
  EXPECT_EQ(m4.size(), 20u);
  Graph one = mycielskian(empty_graph(1));
  EXPECT_EQ(one.order(), 3);
  EXPECT_EQ(one.edges(), (std::vector<Edge>{{1, 2}}));
  // u_i is adjacent exactly to N(v_i) and w.
  Graph g = fixtures::c5_with_triangle();
  Graph m = mycielskian(g);
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) EXPECT_EQ(m.adjacent(n + i, j), g.adjacent(i, j));
    for (int j = 0; j < n; ++j) EXPECT_FALSE(m.adjacent(n + i, n + j));
    EXPECT_TRUE(m.adjacent(n + i, 2 * n));
  }
}

TEST(Graph, RelabelAndCanonicalCode) {
  SplitMix64 rng(99);
  for (const Graph& g : fixtures::random_corpus(40, 1, 8, 13)) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.order() - 1; i > 0; --i) std::swap(perm[i], perm[rng.next() % (i + 1)]);
    Graph h = relabel(g, perm);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(is_isomorphic(graph_from_canonical_code(canonical_code(g)), g));
  }
}

TEST(Graph, CanonicalCodeSeparatesNonIsomorphic) {
  auto corpus = fixtures::random_corpus(60, 4, 6, 17);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j)
      EXPECT_EQ(canonical_code(corpus[i]) == canonical_code(corpus[j]), brute_isomorphic(corpus[i], corpus[j]));
}

TEST(Graph, Connectivity) {
  Graph g = disjoint_union(cycle(5), path(3));
  EXPECT_FALSE(is_connected(g));
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(comps[1], (std::vector<int>{5, 6, 7}));
  EXPECT_TRUE(is_connected(cycle(7)));
}

TEST(Graph, Bipartition) {
  EXPECT_FALSE(bipartition(cycle(5)).has_value());
  const Graph p4 = path(4);
  auto side = bipartition(p4);
  ASSERT_TRUE(side.has_value());
  for (auto [i, j] : p4.edges()) EXPECT_NE((*side)[i], (*side)[j]);
}
