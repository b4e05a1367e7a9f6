#pragma once

#include <cstdint>
#include <span>

#include "sosperfect/graph.hpp"

namespace sosperfect {

Graph complete(int n);
Graph empty_graph(int n);
/// C_n with edges (i, i+1 mod n).
Graph cycle(int n);
/// P_n with edges (i, i+1).
Graph path(int n);
/// Parts are consecutive label blocks in the given order.
Graph complete_multipartite(std::span<const int> part_sizes);
Graph complete_bipartite(int a, int b);
/// C_{2k+1}, k >= 2.
Graph odd_hole(int k);
/// complement(C_{2k+1}), k >= 2.
Graph odd_antihole(int k);
/// i ~ j iff the circular distance min(|i-j|, n-|i-j|) is at most k.
Graph cycle_power(int n, int k);
/// Vertices 0..q-1, x ~ y iff x - y is a nonzero square mod q. q must be a
/// prime congruent to 1 mod 4.
Graph paley(int q);
/// Mycielski sequence: M_2 = K_2, M_{k+1} = mycielskian(M_k).
Graph mycielski(int k);
/// Vertices are the integers 0..2^d-1 read as bit vectors; adjacent iff the
/// Hamming distance is at least t.
Graph hamming_distance_graph(int d, int t);

/// SplitMix64 stream (Steele, Lea, Flood 2014). Version-pinned: G(n,p)
/// samples depend on this exact sequence.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(n, p). Pairs (i, j), i < j, are visited row-major and each
/// draws one uniform() from SplitMix64(seed); the edge is present iff the
/// draw is < p.
Graph gnp_random(int n, double p, std::uint64_t seed);

bool is_prime(int q);

}  // namespace sosperfect
