#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "sosperfect/generators.hpp"
#include "sosperfect/graph.hpp"

using namespace sosperfect;

TEST(Generators, Basics) {
  EXPECT_EQ(complete(5).size(), 10u);
  EXPECT_EQ(empty_graph(4).size(), 0u);
  EXPECT_EQ(cycle(6).size(), 6u);
  EXPECT_EQ(path(1).size(), 0u);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  const int parts[] = {2, 2, 2};
  Graph octahedron = complete_multipartite(parts);
  EXPECT_EQ(octahedron.size(), 12u);
  EXPECT_FALSE(octahedron.adjacent(0, 1));
  EXPECT_TRUE(octahedron.adjacent(1, 2));
  EXPECT_EQ(complete_bipartite(3, 2).size(), 6u);
  EXPECT_EQ(odd_hole(3), cycle(7));
  EXPECT_EQ(odd_antihole(2), complement(cycle(5)));
}

TEST(Generators, CyclePower) {
  EXPECT_EQ(cycle_power(5, 1), cycle(5));
  EXPECT_TRUE(is_isomorphic(cycle_power(7, 2), complement(cycle(7))));
  EXPECT_THROW(cycle_power(2, 1), std::invalid_argument);
  EXPECT_THROW(cycle_power(5, 0), std::invalid_argument);
  Graph g = cycle_power(10, 2);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(Generators, Paley) {
  EXPECT_EQ(paley(5), cycle(5));
  Graph p13 = paley(13);
  EXPECT_EQ(p13.size(), 39u);
  const std::set<int> diffs{1, 3, 4, 9, 10, 12};
  for (int x = 0; x < 13; ++x) {
    EXPECT_EQ(p13.degree(x), 6);
    for (int y = 0; y < 13; ++y)
      if (x != y) EXPECT_EQ(p13.adjacent(x, y), diffs.count(((y - x) % 13 + 13) % 13) == 1);
  }
  EXPECT_THROW(paley(7), std::invalid_argument);
  EXPECT_THROW(paley(9), std::invalid_argument);
  EXPECT_THROW(paley(21), std::invalid_argument);
}

TEST(Generators, PaleySelfComplementary) {
  // x -> 2x maps residues to non-residues for q = 5 and q = 13.
  for (int q : {5, 13}) {
    std::vector<int> perm(q);
    for (int x = 0; x < q; ++x) perm[x] = (2 * x) % q;
    EXPECT_EQ(relabel(paley(q), perm), complement(paley(q))) << q;
  }
}

TEST(Generators, Mycielski) {
  EXPECT_EQ(mycielski(2), complete(2));
  EXPECT_TRUE(is_isomorphic(mycielski(3), cycle(5)));
  EXPECT_EQ(mycielski(4).order(), 11);
  EXPECT_EQ(mycielski(4).size(), 20u);
  EXPECT_THROW(mycielski(1), std::invalid_argument);
}

TEST(Generators, Hamming) {
  Graph h = hamming_distance_graph(6, 4);
  EXPECT_EQ(h.order(), 64);
  // Vectors at distance 4, 5 or 6: C(6,4) + C(6,5) + C(6,6) = 22.
  for (int v = 0; v < 64; ++v) EXPECT_EQ(h.degree(v), 22);
  EXPECT_EQ(hamming_distance_graph(3, 1), complete(8));
}

TEST(Generators, SplitMix64Reference) {
  // Published reference outputs for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(Generators, GnpDeterministic) {
  EXPECT_EQ(gnp_random(30, 0.3, 42), gnp_random(30, 0.3, 42));
  EXPECT_NE(gnp_random(30, 0.3, 42), gnp_random(30, 0.3, 43));
  EXPECT_EQ(gnp_random(9, 0.0, 1), empty_graph(9));
  EXPECT_EQ(gnp_random(9, 1.0, 1), complete(9));
  EXPECT_THROW(gnp_random(5, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(gnp_random(5, -0.1, 1), std::invalid_argument);
}

TEST(Generators, GnpPinnedOrder) {
  // Pair (i, j) consumes the draws in row-major order.
  SplitMix64 rng(2024);
  std::vector<Edge> expected;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < 0.4) expected.emplace_back(i, j);
  EXPECT_EQ(gnp_random(12, 0.4, 2024).edges(), expected);
}

TEST(Generators, GnpMeanEdges) {
  double total = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) total += gnp_random(20, 0.5, s).size();
  EXPECT_NEAR(total / 1000, 95.0, 5.0);
}

TEST(Generators, IsPrime) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(91));
}
