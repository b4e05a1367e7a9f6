#include "sosperfect/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "sosperfect/combinatorics.hpp"
#include "sosperfect/generators.hpp"
#include "sosperfect/theta_bounds.hpp"

namespace sosperfect {

namespace {

// Distance from the interval [lo, hi] to the nearest integer (0 if it
// contains one).
double distance_to_integers(double lo, double hi) {
  if (std::floor(hi) >= std::ceil(lo)) return 0.0;
  return std::min(lo - std::floor(lo), std::ceil(hi) - hi);
}

// The interval fits inside [j - m, j + m] for some integer j.
bool near_integer(double lo, double hi, double m) {
  const double j = std::round(0.5 * (lo + hi));
  return lo >= j - m && hi <= j + m;
}

}  // namespace

TrialRecord run_trial(int n, double p, std::uint64_t seed, int index, const SdpOptions& opts) {
  TrialRecord r;
  r.index = index;
  r.seed = seed ^ static_cast<std::uint64_t>(index);
  const Graph g = gnp_random(n, p, r.seed);
  r.edges = static_cast<int>(g.size());
  r.omega = clique_number(g);
  const double m = kMarginFactor * opts.tol;
  SdpOptions o = opts;
  o.stop_when = [m](double lo, double hi) { return distance_to_integers(lo, hi) > m || near_integer(lo, hi, m); };
  const ThetaResult th = theta_prime(g, o);
  r.theta_lower = th.lower;
  r.theta_upper = th.upper;
  r.iterations = th.iterations;
  r.status = th.status;
  r.non_integer = distance_to_integers(th.lower, th.upper) > m;
  r.integer = !r.non_integer && near_integer(th.lower, th.upper, m);
  r.certified_not_sos = th.lower > r.omega + m;
  return r;
}

ExperimentSummary run_experiment(int n, double p, int trials, std::uint64_t seed, const SdpOptions& opts,
                                 Execution exec) {
  if (trials < 1) throw std::invalid_argument("run_experiment: trials must be positive");
  if (n < 1) throw std::invalid_argument("run_experiment: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("run_experiment: p must lie in [0, 1]");
  ExperimentSummary s;
  s.n = n;
  s.p = p;
  s.trials = trials;
  s.seed = seed;
  s.tol = opts.tol;
  s.records.resize(trials);
  if (exec == Execution::serial) {
    for (int i = 0; i < trials; ++i) s.records[i] = run_trial(n, p, seed, i, opts);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) s.records[i] = run_trial(n, p, seed, i, opts);
  }
  for (const auto& r : s.records) {
    s.count_noninteger_theta_prime += r.non_integer;
    s.count_margin_certified_not_sos += r.certified_not_sos;
    s.count_undecided += !r.non_integer && !r.integer;
  }
  return s;
}

}  // namespace sosperfect
