#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "sosperfect/graph.hpp"
#include "sosperfect/linalg.hpp"

namespace sosperfect {

/// maximize <C, X>  s.t.  Tr X = trace_value, X_ij = 0 for (i, j) in
/// zero_pattern, X psd, and X >= 0 entrywise when require_nonnegative.
///
/// C defaults to the all-ones matrix J (the theta shape).
struct SdpProblem {
  int n = 0;
  std::vector<Edge> zero_pattern;  // pairs with i != j; orientation ignored
  double trace_value = 1.0;
  bool require_nonnegative = false;
  std::optional<linalg::Matrix> objective;

  linalg::Matrix objective_matrix() const;
  /// Throws std::invalid_argument on bad dimensions, diagonal pattern
  /// entries or an asymmetric objective.
  void validate() const;
};

struct PrimalResiduals {
  double trace = 0.0;           // |Tr X - trace_value|
  double pattern = 0.0;         // max |X_ij| over the zero pattern
  double min_eigenvalue = 0.0;  // lambda_min(X)
  double min_entry = 0.0;       // min_ij X_ij
  double symmetry = 0.0;        // max |X_ij - X_ji|
  double objective = 0.0;       // <C, X>
  /// Residual report against tolerance tol (min_entry only counted when the
  /// problem asks for nonnegativity).
  bool feasible = false;
};

/// `stopped` means the caller's stop_when predicate ended the run early; the
/// certified interval is still valid, just wider than tol.
enum class SdpStatus { optimal, max_iter, infeasible_numerics, stopped };
const char* to_string(SdpStatus s);

struct SdpSolution {
  /// Exactly feasible up to rounding: the returned X is a repaired copy of
  /// the last iterate, so objective_value is a certified lower bound.
  linalg::Matrix X;
  double objective_value = -std::numeric_limits<double>::infinity();
  /// Certified upper bound from repaired dual variables.
  double dual_bound = std::numeric_limits<double>::infinity();
  /// B = C + Z + W with Z >= 0 and W supported on the zero pattern, so that
  /// dual_bound = trace_value * lambda_max(B). See check_dual_certificate.
  linalg::Matrix dual_certificate;
  PrimalResiduals primal_residuals;
  int iterations = 0;
  SdpStatus status = SdpStatus::max_iter;

  double gap() const { return dual_bound - objective_value; }
  /// Midpoint of the certified interval.
  double estimate() const { return 0.5 * (objective_value + dual_bound); }
};

struct SdpOptions {
  double tol = 1e-7;
  int max_iter = 50000;
  double mu0 = 1.0;
  /// Bounds are recomputed (two extra eigendecompositions) every this many
  /// iterations.
  int check_every = 10;
  /// Optional starting point; defaults to trace_value * I / n.
  std::optional<linalg::Matrix> warm_start;
  /// Called with the certified interval (lower, upper) at each bound check;
  /// returning true ends the run early.
  std::function<bool(double, double)> stop_when;
};

/// Dual ADMM on the slack variables (y, Z, S) with X as multiplier. On
/// return the certified interval [objective_value, dual_bound] has relative
/// width <= tol when status == optimal.
SdpSolution solve(const SdpProblem& p, const SdpOptions& opts);
SdpSolution solve(const SdpProblem& p, double tol = 1e-7, int max_iter = 50000);

/// Recomputes the upper bound carried by a dual certificate B: checks that
/// B - C is nonnegative outside the zero pattern (diagonal included) and
/// returns trace_value * lambda_max(B), or +inf if the check fails.
double check_dual_certificate(const SdpProblem& p, const linalg::Matrix& B);

/// Recomputes every constraint residual of X from scratch.
PrimalResiduals verify_feasible(const SdpProblem& p, const linalg::Matrix& X, double tol);

}  // namespace sosperfect
