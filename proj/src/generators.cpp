#include "sosperfect/generators.hpp"

#include <cstdlib>
#include <vector>

namespace sosperfect {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be positive");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> part;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw std::invalid_argument("complete_multipartite: part sizes must be positive");
    part.insert(part.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[i] != part[j]) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph odd_hole(int k) {
  if (k < 2) throw std::invalid_argument("odd_hole: k must be at least 2");
  return cycle(2 * k + 1);
}

Graph odd_antihole(int k) {
  if (k < 2) throw std::invalid_argument("odd_antihole: k must be at least 2");
  return complement(cycle(2 * k + 1));
}

Graph cycle_power(int n, int k) {
  if (n < 3) throw std::invalid_argument("cycle_power: n must be at least 3");
  if (k < 1) throw std::invalid_argument("cycle_power: k must be at least 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = j - i;
      if (std::min(d, n - d) <= k) e.emplace_back(i, j);
    }
  return Graph(n, e);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph paley(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw std::invalid_argument("paley: q must be a prime congruent to 1 mod 4");
  std::vector<char> residue(q, 0);
  for (long a = 1; a < q; ++a) residue[(a * a) % q] = 1;
  std::vector<Edge> e;
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y)
      if (residue[(y - x) % q]) e.emplace_back(x, y);
  return Graph(q, e);
}

Graph mycielski(int k) {
  if (k < 2) throw std::invalid_argument("mycielski: k must be at least 2");
  Graph g = complete(2);
  for (int i = 2; i < k; ++i) g = mycielskian(g);
  return g;
}

Graph hamming_distance_graph(int d, int t) {
  if (d < 1 || d > 16) throw std::invalid_argument("hamming_distance_graph: d must be in [1, 16]");
  const int n = 1 << d;
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (__builtin_popcount(static_cast<unsigned>(i ^ j)) >= t) e.emplace_back(i, j);
  return Graph(n, e);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph gnp_random(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp_random: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < p) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace sosperfect
