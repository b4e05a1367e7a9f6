#pragma once

#include <cstdint>
#include <vector>

#include "sosperfect/generators.hpp"
#include "sosperfect/graph.hpp"

namespace fixtures {

using sosperfect::Edge;
using sosperfect::Graph;

// Vertex v_i of the figures is label i - 1 throughout.

// 14 vertices: a 5-cycle v1..v5 with pendant structure hung off it.
inline Graph fourteen_vertex_extension() {
  return Graph(14, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {4, 6}, {4, 7}, {3, 8}, {8, 9},
                    {0, 10}, {2, 11}, {10, 11}, {11, 12}, {12, 13}, {10, 13}});
}

// C5 plus h (label 5) adjacent to v1 and v2: omega = chi = 3, p_G sos, imperfect.
inline Graph c5_with_triangle() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}}); }

// C5 plus v6 adjacent to v1, v4, v5.
inline Graph c5_with_three_neighbours() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 3}, {5, 4}});
}

// C5 with v6 ~ v3, v4 and v7 ~ v1, v4, v5; replicating v2 gives the next one.
inline Graph seven_vertex_graph() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 2}, {5, 3}, {6, 0}, {6, 3}, {6, 4}});
}

// C5 plus an apex adjacent to every cycle vertex.
inline Graph c5_with_apex() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

inline std::vector<Graph> random_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  sosperfect::SplitMix64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = min_n + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n - min_n + 1));
    const double p = 0.15 + 0.7 * rng.uniform();
    out.push_back(sosperfect::gnp_random(n, p, rng.next()));
  }
  return out;
}

}  // namespace fixtures
