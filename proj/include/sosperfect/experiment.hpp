#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sosperfect/parallel.hpp"
#include "sosperfect/sdp.hpp"

namespace sosperfect {

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;  // experiment seed xor index
  int edges = 0;
  int omega = 0;
  double theta_lower = 0.0;
  double theta_upper = 0.0;
  int iterations = 0;
  SdpStatus status = SdpStatus::optimal;
  /// The certified interval keeps more than kMarginFactor * tol from every integer.
  bool non_integer = false;
  /// The interval lies within kMarginFactor * tol of an integer.
  bool integer = false;
  /// theta'_lower > omega + kMarginFactor * tol.
  bool certified_not_sos = false;
};

struct ExperimentSummary {
  int n = 0;
  double p = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int count_noninteger_theta_prime = 0;
  int count_margin_certified_not_sos = 0;
  /// Trials whose interval was still ambiguous when the solver stopped.
  int count_undecided = 0;
  std::vector<TrialRecord> records;
};

/// One trial: G = gnp_random(n, p, seed ^ index), theta' of its complement
/// solved only until the integrality question is settled.
TrialRecord run_trial(int n, double p, std::uint64_t seed, int index, const SdpOptions& opts);

/// Trials are independent; the parallel path reduces in index order, so both
/// executions return identical summaries.
ExperimentSummary run_experiment(int n, double p, int trials, std::uint64_t seed, const SdpOptions& opts = {},
                                 Execution exec = Execution::parallel);

}  // namespace sosperfect
