#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "sosperfect/combinatorics.hpp"
#include "sosperfect/graph.hpp"
#include "sosperfect/linalg.hpp"
#include "sosperfect/parallel.hpp"
#include "sosperfect/sdp.hpp"

namespace sosperfect {

/// A value known only through a certified interval [lower, upper].
struct ThetaResult {
  double lower = 0.0;
  double upper = 0.0;
  SdpStatus status = SdpStatus::optimal;
  int iterations = 0;
  linalg::Matrix X;  // feasible witness attaining `lower`
  linalg::Matrix dual_certificate;  // attains `upper`, see check_dual_certificate
  PrimalResiduals residuals;

  double value() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

/// Margin multiplier: strict comparisons against integers are certified only
/// with a gap above kMarginFactor * tol.
inline constexpr double kMarginFactor = 50.0;

/// theta(complement(g)) and theta'(complement(g)). Both take g itself; the
/// zero pattern is the non-edge set of g.
ThetaResult theta(const Graph& g, const SdpOptions& opts = {});
ThetaResult theta_prime(const Graph& g, const SdpOptions& opts = {});

enum class SosVerdict { sos, not_sos, inconclusive };
const char* to_string(SosVerdict v);

struct SosTest {
  SosVerdict verdict = SosVerdict::inconclusive;
  double k = 0.0;
  ThetaResult threshold;  // theta'(complement(g))
  /// Signed distance threshold - k, taken from the side of the interval
  /// that decided the verdict.
  double margin = 0.0;
};

/// p_{G,k} is sos iff k >= theta'(complement(g)). Verdict policy with
/// m = kMarginFactor * tol: not_sos when lower > k + m, sos when upper <= k + m,
/// inconclusive otherwise. The solver stops as soon as the interval decides.
SosTest sos_test(const Graph& g, double k, const SdpOptions& opts = {});
/// Same test for p_G (k = omega(g)).
SosTest sos_test(const Graph& g, const SdpOptions& opts = {});

/// The threshold itself: theta'(complement(g)).
inline ThetaResult sos_threshold(const Graph& g, const SdpOptions& opts = {}) { return theta_prime(g, opts); }

enum class SweepMode { full, spgt_candidates };

inline constexpr int kFullSweepCap = 12;
inline constexpr int kCandidateSweepCap = 20;

struct SosPerfectVerdict {
  enum class Result { sos_perfect, not_sos_perfect, inconclusive };
  Result result = Result::sos_perfect;
  SweepMode mode = SweepMode::full;
  /// Induced subgraph H with omega(H) < theta'(complement(H)) by margin.
  std::optional<std::vector<Vertex>> witness;
  std::optional<SosTest> witness_test;
  /// Subsets whose comparison could not be decided.
  std::vector<std::vector<Vertex>> undecided;
  int subgraphs = 0;
  int sdp_solves = 0;
  int shortcuts = 0;
};
const char* to_string(SosPerfectVerdict::Result r);

/// full: every induced subgraph by increasing size, lexicographic within a
/// size; the first not_sos subgraph is the witness (n <= 12).
/// spgt_candidates: only the odd hole/antihole returned by
/// find_odd_hole_or_antihole is tested (n <= 20).
/// Induced subgraphs that are disjoint unions of cliques or complete
/// multipartite have theta' = omega and skip the SDP; others are solved in
/// canonical labelling and cached by isomorphism class when n <= 8.
SosPerfectVerdict is_sos_perfect(const Graph& g, SweepMode mode = SweepMode::full, const SdpOptions& opts = {},
                                 Execution exec = Execution::parallel);

bool is_disjoint_union_of_cliques(const Graph& g);
bool is_complete_multipartite(const Graph& g);

/// tau(I + Abar) - J = D + N with D diagonally dominant and N >= 0 for
/// tau = maxdeg + 1.
struct TauCertificate {
  int value = 0;
  linalg::Matrix D;
  linalg::Matrix N;
  bool verify(const Graph& g) const;
};
TauCertificate tau(const Graph& g);

/// gamma = lambda_max(A) + 1 with a positive scaling d (Perron vectors per
/// component) such that diag(d) ((gamma - 1) I - A) diag(d) is diagonally
/// dominant.
struct GammaCertificate {
  double value = 0.0;
  linalg::Vector scaling;
  bool verify(const Graph& g, double tol = 1e-9) const;
};
GammaCertificate gamma(const Graph& g);

struct RhoResult {
  bool finite = false;
  double value = std::numeric_limits<double>::infinity();
  /// Vertices (a, b, c) inducing the one-edge graph on three vertices, with
  /// the edge a ~ c and b isolated.
  std::optional<std::array<Vertex, 3>> obstruction;
  /// Finite case: omega (I + Abar) - J passed is_psd. Infinite case: the
  /// obstruction was checked to be non-psd for every k.
  bool verified = false;
};
RhoResult rho(const Graph& g);
/// Checks that the 3 x 3 principal submatrix of k (I + Abar) - J on the
/// obstruction fails to be psd for every real k: diagonal k - 1 < 0 for
/// k < 1, and (1, -1, 1) gives -(k + 1) < 0 for k >= 1.
bool verify_rho_obstruction(const Graph& g, const std::array<Vertex, 3>& t);

struct HyperplaneCertificate {
  linalg::Matrix X;   // feasible for the nonnegative theta problem
  linalg::Matrix Mp;  // coefficient matrix of p_G
  int omega = 0;
  double inner = 0.0;  // <X, Mp>  (= omega - <J, X>)
  ThetaResult theta_prime;
  int samples = 0;
  double min_sample_inner = std::numeric_limits<double>::infinity();
  bool valid = false;
};

/// For p_G not sos: <X, Mp> < 0 while <X, P + N> >= 0 for every psd P and
/// nonnegative N, checked on `samples` random pairs. Returns nothing unless
/// sos_test(g) says not_sos.
std::optional<HyperplaneCertificate> separating_hyperplane(const Graph& g, int samples = 1000,
                                                           std::uint64_t seed = 1, const SdpOptions& opts = {});
/// Recomputes feasibility of X, <X, Mp> and the strict sign from the stored
/// matrices alone.
bool recheck_hyperplane(const Graph& g, const linalg::Matrix& X, double claimed_inner, double tol = 1e-7);

enum class Membership { member, not_member, undecided };
struct MembershipResult {
  Membership verdict = Membership::undecided;
  /// Certified interval for min <M, X> over X psd, X >= 0, Tr X = 1.
  double lower = 0.0;
  double upper = 0.0;
};
/// M in S+ + N iff min <M, X> over the trace-one doubly nonnegative
/// matrices is >= 0. undecided only when the interval still contains 0 at
/// the solver tolerance.
MembershipResult psd_plus_nonnegative(const linalg::Matrix& M, const SdpOptions& opts = {});

struct Bisection {
  double lo = 0.0;
  double hi = 0.0;
  int solves = 0;
  double value() const { return 0.5 * (lo + hi); }
};
/// Smallest k in [lo, hi] with -kA + (k-1)J in S+ + N, by bisection on the
/// membership SDP to bracket width `width`.
Bisection sos_threshold_bisection(const Graph& g, double lo, double hi, double width = 1e-6,
                                  const SdpOptions& opts = {});
/// Largest s in [-1, 0] with Mp - sJ in S+ + N, by bisection.
Bisection p_sos_bisection(const Graph& g, double width = 1e-6, const SdpOptions& opts = {});
/// Closed form p_sos = omega / theta' - 1, from Mp - sJ = omega (I + Abar) - (1 + s) J.
double p_sos_value(const Graph& g, const SdpOptions& opts = {});

inline constexpr int kAimpCap = 10;
struct AimpResult {
  double value = 1.0;
  std::vector<Vertex> argmax;  // induced subgraph attaining the maximum
  int subgraphs = 0;
  int skipped_edgeless = 0;  // omega(H) = 1, ratio undefined
};
/// max over induced H with omega(H) >= 2 of 1 - p_sos(H) / (omega(H) - 1).
/// Throws ResourceLimitError when n > cap.
AimpResult aimp(const Graph& g, int cap = kAimpCap, const SdpOptions& opts = {},
                Execution exec = Execution::parallel);

struct MotzkinStrausReport {
  int omega = 0;
  double best_value = 0.0;    // smallest x^T (I + Abar) x found
  double clique_value = 0.0;  // at the uniform vector on a maximum clique
  std::vector<double> best_point;
  bool passed = false;
};
/// Projected gradient descent on the simplex from `starts` random points.
MotzkinStrausReport motzkin_straus_check(const Graph& g, int starts = 20, std::uint64_t seed = 1);

struct HessianWitness {
  std::vector<double> point;  // unit vector e_v
  Vertex u = 0;               // H_uu(e_v) = 4 (shift - 1) for the edge uv
  Vertex v = 0;
  double value = 0.0;
};
/// For shift < 1 returns the negative Hessian entry on the first edge.
/// For shift >= 1 returns nothing. Throws std::invalid_argument on an
/// edgeless graph.
std::optional<HessianWitness> hessian_witness(const Graph& g, double k, double shift);
/// Exact check that p_{G,k,1} = k sum x_i^4 + 2k sum_{ij not in E, i<j} x_i^2 x_j^2.
bool unit_shift_expansion_holds(const Graph& g, double k);

struct BoundLadder {
  int omega = 0;
  int alpha = 0;
  std::optional<int> chi;
  ThetaResult theta;
  ThetaResult theta_prime;
  GammaCertificate gamma;
  TauCertificate tau;
  RhoResult rho;
  SosVerdict sos_verdict = SosVerdict::inconclusive;
  double sos_margin = 0.0;
  double tol = 0.0;

  /// omega <= theta' <= theta <= chi and theta' <= gamma <= tau, each up to
  /// 2 tol (relative to the value).
  bool ordered() const;
};
BoundLadder bound_ladder(const Graph& g, bool with_chi, const SdpOptions& opts = {});

}  // namespace sosperfect
