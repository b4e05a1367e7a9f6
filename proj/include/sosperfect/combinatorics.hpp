#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sosperfect/graph.hpp"
#include "sosperfect/linalg.hpp"
#include "sosperfect/parallel.hpp"
#include "sosperfect/sdp.hpp"

namespace sosperfect {

/// Branch and bound with greedy-colouring bounds over bitset rows. Exact;
/// practical up to n of about 60 on dense random graphs, far more on sparse ones.
int clique_number(const Graph& g);
/// Some maximum clique (sorted); empty for the graph on zero vertices.
std::vector<Vertex> maximum_clique(const Graph& g);
int independence_number(const Graph& g);

inline constexpr int kChromaticCap = 25;
/// Exact chromatic number by k-colourability tests for k = omega, omega+1,
/// ... Throws ResourceLimitError when n exceeds `cap`.
int chromatic_number(const Graph& g, int cap = kChromaticCap);
/// A proper colouring with chromatic_number(g) colours.
std::vector<int> optimal_colouring(const Graph& g, int cap = kChromaticCap);

/// 0/1 incidence of maximum cliques (rows) against vertices (columns).
struct MaxCliqueMatrix {
  int m = 0;
  int n = 0;
  int omega = 0;
  std::vector<std::vector<Vertex>> cliques;  // sorted, lexicographic order
  linalg::Matrix rows;                       // m x n

  /// lambda_min(C^T C).
  double lambda1() const;
};

/// All cliques of size omega(g), sorted lexicographically.
MaxCliqueMatrix maximum_cliques(const Graph& g);

/// Induced odd cycle of length >= 5 in g (hole) or in complement(g)
/// (antihole), listed in cyclic order.
struct OddHoleWitness {
  std::vector<Vertex> cycle;
  bool antihole = false;

  /// Re-checks that `cycle` induces C_{2k+1} in g (or in complement(g)).
  bool verify(const Graph& g) const;
};

inline constexpr int kOddHoleCap = 20;
/// Shortest odd hole or antihole; ties go to the lexicographically smallest
/// sorted vertex set, holes before antiholes. Throws ResourceLimitError when
/// n exceeds `cap`.
std::optional<OddHoleWitness> find_odd_hole_or_antihole(const Graph& g, int cap = kOddHoleCap);

enum class PerfectnessMethod { spgt_scan, definition_scan };
const char* to_string(PerfectnessMethod m);

inline constexpr int kDefinitionScanCap = 12;

struct PerfectnessVerdict {
  bool perfect = true;
  PerfectnessMethod method = PerfectnessMethod::spgt_scan;
  std::optional<OddHoleWitness> hole;           // spgt_scan
  std::optional<std::vector<Vertex>> subgraph;  // definition_scan: omega(H) != chi(H)

  /// A positive verdict has nothing to re-check; a negative one must carry
  /// a witness that holds up.
  bool verify(const Graph& g) const;
};

/// spgt_scan looks for an odd hole/antihole (n <= 20); definition_scan
/// compares omega and chi on every induced subgraph by increasing size
/// (n <= 12) so the witness is smallest possible.
PerfectnessVerdict is_perfect(const Graph& g, PerfectnessMethod method = PerfectnessMethod::spgt_scan,
                              Execution exec = Execution::parallel);

/// theta'-type problem for the complement of g: X_ij = 0 for every non-edge
/// of g, Tr X = 1, X psd (and X >= 0 when nonnegative).
SdpProblem theta_problem(const Graph& g, bool nonnegative);

struct PartitionableCertificate {
  MaxCliqueMatrix cliques;
  double lambda1 = 0.0;
  /// (omega^2 - lambda1) / (omega - lambda1)
  double lower_bound = 0.0;
  linalg::Matrix X;
  PrimalResiduals residuals;
};

/// Builds X = (C^T C - lambda1 I) / (n (omega - lambda1)) when g has exactly n
/// maximum cliques, every vertex lies in exactly omega of them and C is
/// nonsingular; returns nothing otherwise. The residuals come from
/// verify_feasible on the nonnegative theta problem.
std::optional<PartitionableCertificate> partitionable_certificate(const Graph& g, double tol = 1e-9);

}  // namespace sosperfect
