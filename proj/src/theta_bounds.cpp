#include "sosperfect/theta_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "sosperfect/generators.hpp"
#include "sosperfect/polynomials.hpp"

namespace sosperfect {

using linalg::Matrix;
using linalg::Vector;

namespace {

ThetaResult run_theta(const Graph& g, bool nonnegative, const SdpOptions& opts) {
  if (g.order() == 0) throw std::invalid_argument("theta: graph has no vertices");
  const SdpSolution s = solve(theta_problem(g, nonnegative), opts);
  ThetaResult r;
  r.lower = s.objective_value;
  r.upper = s.dual_bound;
  r.status = s.status;
  r.iterations = s.iterations;
  r.X = s.X;
  r.dual_certificate = s.dual_certificate;
  r.residuals = s.primal_residuals;
  return r;
}

SosTest classify(double k, ThetaResult threshold, double tol) {
  SosTest t;
  t.k = k;
  const double m = kMarginFactor * tol;
  if (threshold.lower > k + m) {
    t.verdict = SosVerdict::not_sos;
    t.margin = threshold.lower - k;
  } else if (threshold.upper <= k + m) {
    t.verdict = SosVerdict::sos;
    t.margin = threshold.upper - k;
  } else {
    t.verdict = SosVerdict::inconclusive;
    t.margin = threshold.value() - k;
  }
  t.threshold = std::move(threshold);
  return t;
}

// Sizes at which canonical relabelling is cheap enough to be worth caching.
constexpr int kCacheMaxOrder = 8;

// Memoises per-isomorphism-class results computed on the canonical labelling,
// so the cached value never depends on which labelled copy arrived first.
template <typename T>
class ClassCache {
 public:
  template <typename F>
  T get(const Graph& h, F compute, bool& solved) {
    solved = false;
    if (h.order() > kCacheMaxOrder) {
      solved = true;
      return compute(h);
    }
    const std::string code = canonical_code(h);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = map_.find(code); it != map_.end()) return it->second;
    }
    T value = compute(graph_from_canonical_code(code));
    solved = true;
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(code, value);
    return value;
  }

 private:
  std::mutex mu_;
  std::map<std::string, T> map_;
};

std::vector<std::vector<Vertex>> subsets_of_size(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

bool theta_prime_equals_omega_structurally(const Graph& h) {
  return is_disjoint_union_of_cliques(h) || is_complete_multipartite(h);
}

template <typename F>
void for_each_index(int count, Execution exec, F body) {
  if (exec == Execution::serial) {
    for (int i = 0; i < count; ++i) body(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) body(i);
  }
}

}  // namespace

const char* to_string(SosVerdict v) {
  switch (v) {
    case SosVerdict::sos: return "sos";
    case SosVerdict::not_sos: return "not_sos";
    case SosVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(SosPerfectVerdict::Result r) {
  switch (r) {
    case SosPerfectVerdict::Result::sos_perfect: return "sos_perfect";
    case SosPerfectVerdict::Result::not_sos_perfect: return "not_sos_perfect";
    case SosPerfectVerdict::Result::inconclusive: return "inconclusive";
  }
  return "?";
}

ThetaResult theta(const Graph& g, const SdpOptions& opts) { return run_theta(g, false, opts); }
ThetaResult theta_prime(const Graph& g, const SdpOptions& opts) { return run_theta(g, true, opts); }

SosTest sos_test(const Graph& g, double k, const SdpOptions& opts) {
  SdpOptions o = opts;
  const double m = kMarginFactor * opts.tol;
  o.stop_when = [k, m](double lo, double hi) { return lo > k + m || hi <= k + m; };
  return classify(k, theta_prime(g, o), opts.tol);
}

SosTest sos_test(const Graph& g, const SdpOptions& opts) { return sos_test(g, clique_number(g), opts); }

bool is_disjoint_union_of_cliques(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    const std::size_t k = comp.size();
    for (int v : comp)
      if (static_cast<std::size_t>(g.degree(v)) != k - 1) return false;
  }
  return true;
}

bool is_complete_multipartite(const Graph& g) { return is_disjoint_union_of_cliques(complement(g)); }

SosPerfectVerdict is_sos_perfect(const Graph& g, SweepMode mode, const SdpOptions& opts, Execution exec) {
  const int n = g.order();
  SosPerfectVerdict out;
  out.mode = mode;
  if (mode == SweepMode::spgt_candidates) {
    if (n > kCandidateSweepCap)
      throw ResourceLimitError("is_sos_perfect: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kCandidateSweepCap));
    auto w = find_odd_hole_or_antihole(g, kCandidateSweepCap);
    if (!w) return out;
    auto s = w->cycle;
    std::sort(s.begin(), s.end());
    SosTest t = sos_test(induced_subgraph(g, s), opts);
    out.subgraphs = 1;
    out.sdp_solves = 1;
    if (t.verdict == SosVerdict::not_sos) {
      out.result = SosPerfectVerdict::Result::not_sos_perfect;
      out.witness = s;
      out.witness_test = t;
    } else {
      out.result = SosPerfectVerdict::Result::inconclusive;
      out.undecided.push_back(s);
    }
    return out;
  }

  if (n > kFullSweepCap)
    throw ResourceLimitError("is_sos_perfect: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kFullSweepCap));
  ClassCache<SosTest> cache;
  for (int k = 1; k <= n; ++k) {
    const auto subsets = subsets_of_size(n, k);
    const int count = static_cast<int>(subsets.size());
    std::vector<SosTest> tests(count);
    std::vector<char> shortcut(count, 0), solved(count, 0);
    for_each_index(count, exec, [&](int i) {
      const Graph h = induced_subgraph(g, subsets[i]);
      if (theta_prime_equals_omega_structurally(h)) {
        shortcut[i] = 1;
        tests[i].verdict = SosVerdict::sos;
        tests[i].k = clique_number(h);
        return;
      }
      bool did_solve = false;
      tests[i] = cache.get(h, [&](const Graph& c) { return sos_test(c, opts); }, did_solve);
      solved[i] = did_solve;
    });
    out.subgraphs += count;
    for (int i = 0; i < count; ++i) {
      out.shortcuts += shortcut[i];
      out.sdp_solves += solved[i];
    }
    for (int i = 0; i < count; ++i) {
      if (tests[i].verdict == SosVerdict::not_sos) {
        out.result = SosPerfectVerdict::Result::not_sos_perfect;
        out.witness = subsets[i];
        out.witness_test = tests[i];
        return out;
      }
      if (tests[i].verdict == SosVerdict::inconclusive) out.undecided.push_back(subsets[i]);
    }
  }
  if (!out.undecided.empty()) out.result = SosPerfectVerdict::Result::inconclusive;
  return out;
}

bool TauCertificate::verify(const Graph& g) const {
  const int n = g.order();
  if (value != g.max_degree() + 1 || D.rows() != n || N.rows() != n) return false;
  const Matrix abar = Matrix::Ones(n, n) - Matrix::Identity(n, n) - g.adjacency();
  const Matrix target = value * (Matrix::Identity(n, n) + abar) - Matrix::Ones(n, n);
  return (D + N - target).cwiseAbs().maxCoeff() == 0.0 && linalg::is_dd(D) && N.minCoeff() >= 0.0;
}

TauCertificate tau(const Graph& g) {
  const int n = g.order();
  TauCertificate c;
  const int delta = n ? g.max_degree() : 0;
  c.value = delta + 1;
  c.D = Matrix::Zero(n, n);
  c.N = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    c.D(i, i) = delta;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.adjacent(i, j)) c.D(i, j) = -1.0;
      else c.N(i, j) = delta;
    }
  }
  return c;
}

bool GammaCertificate::verify(const Graph& g, double tol) const {
  const int n = g.order();
  if (scaling.size() != n || (n && scaling.minCoeff() <= 0.0)) return false;
  const Matrix M = (value - 1.0) * Matrix::Identity(n, n) - g.adjacency();
  const Matrix scaled = scaling.asDiagonal() * M * scaling.asDiagonal();
  return linalg::is_dd(scaled, tol * std::max(1.0, linalg::inf_norm(M)));
}

GammaCertificate gamma(const Graph& g) {
  const int n = g.order();
  GammaCertificate c;
  c.value = (n ? linalg::lambda_max(g.adjacency()) : 0.0) + 1.0;
  c.scaling = Vector::Ones(n);
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    const Graph h = induced_subgraph(g, comp);
    const auto ed = linalg::eigen_symmetric(h.adjacency());
    Vector perron = ed.vectors.col(h.order() - 1).cwiseAbs();
    perron /= perron.maxCoeff();
    for (std::size_t i = 0; i < comp.size(); ++i) c.scaling[comp[i]] = perron[i];
  }
  return c;
}

bool verify_rho_obstruction(const Graph& g, const std::array<Vertex, 3>& t) {
  const auto [a, b, c] = t;
  const int n = g.order();
  for (int v : t)
    if (v < 0 || v >= n) return false;
  if (a == b || b == c || a == c) return false;
  if (!g.adjacent(a, c) || g.adjacent(a, b) || g.adjacent(b, c)) return false;
  const Vector x = (Vector(3) << 1.0, -1.0, 1.0).finished();
  for (double k : {-10.0, -1.0, 0.0, 0.5, 1.0, 2.0, std::sqrt(5.0), 10.0, 1e3}) {
    Matrix sub(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) {
        const bool nonadjacent_or_same = r == s || !g.adjacent(t[r], t[s]);
        sub(r, s) = k * (nonadjacent_or_same ? 1.0 : 0.0) - 1.0;
      }
    const bool negative = k < 1.0 ? sub(0, 0) < 0.0 : x.dot(sub * x) < 0.0;
    if (!negative || linalg::is_psd(sub, 0.0)) return false;
  }
  return true;
}

RhoResult rho(const Graph& g) {
  RhoResult r;
  const int n = g.order();
  if (is_complete_multipartite(g)) {
    r.finite = true;
    const int w = clique_number(g);
    r.value = w;
    const Matrix abar = Matrix::Ones(n, n) - Matrix::Identity(n, n) - g.adjacency();
    r.verified = linalg::is_psd(w * (Matrix::Identity(n, n) + abar) - Matrix::Ones(n, n));
    return r;
  }
  for (auto [a, c] : g.edges())
    for (int b = 0; b < n; ++b)
      if (b != a && b != c && !g.adjacent(a, b) && !g.adjacent(b, c)) {
        r.obstruction = std::array<Vertex, 3>{a, b, c};
        r.verified = verify_rho_obstruction(g, *r.obstruction);
        return r;
      }
  return r;
}

std::optional<HyperplaneCertificate> separating_hyperplane(const Graph& g, int samples, std::uint64_t seed,
                                                           const SdpOptions& opts) {
  const int n = g.order();
  const int w = clique_number(g);
  ThetaResult th = theta_prime(g, opts);
  if (th.lower <= w + kMarginFactor * opts.tol) return std::nullopt;
  HyperplaneCertificate c;
  c.omega = w;
  c.X = th.X;
  c.Mp = build_p_g(g).to_matrix();
  c.inner = linalg::inner(c.X, c.Mp);
  c.theta_prime = th;
  c.samples = samples;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  for (int s = 0; s < samples; ++s) {
    Matrix B(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B(i, j) = normal(rng);
    Matrix N(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) N(i, j) = N(j, i) = uniform(rng);
    const Matrix q = B * B.transpose() / n + N;
    c.min_sample_inner = std::min(c.min_sample_inner, linalg::inner(c.X, q));
  }
  const double expected = w - c.X.sum();
  c.valid = th.residuals.feasible && c.inner < 0.0 && std::abs(c.inner - expected) <= 1e-9 * (1.0 + w) &&
            (samples == 0 || c.min_sample_inner >= -1e-8);
  return c;
}

bool recheck_hyperplane(const Graph& g, const Matrix& X, double claimed_inner, double tol) {
  const auto res = verify_feasible(theta_problem(g, true), X, tol);
  if (!res.feasible) return false;
  const double inner = linalg::inner(X, build_p_g(g).to_matrix());
  return inner < 0.0 && std::abs(inner - claimed_inner) <= tol * (1.0 + std::abs(claimed_inner));
}

MembershipResult psd_plus_nonnegative(const Matrix& M, const SdpOptions& opts) {
  SdpProblem p;
  p.n = static_cast<int>(M.rows());
  p.require_nonnegative = true;
  p.objective = -M;
  SdpOptions o = opts;
  o.stop_when = [](double lo, double hi) { return hi <= 0.0 || lo > 0.0; };
  const SdpSolution s = solve(p, o);
  MembershipResult r;
  r.lower = -s.dual_bound;
  r.upper = -s.objective_value;
  if (r.lower >= 0.0) r.verdict = Membership::member;
  else if (r.upper < 0.0) r.verdict = Membership::not_member;
  return r;
}

namespace {

template <typename MatrixAt>
Bisection bisect(double lo, double hi, double width, const SdpOptions& opts, MatrixAt matrix_at, bool member_high) {
  Bisection b{lo, hi, 0};
  while (b.hi - b.lo > width) {
    const double mid = 0.5 * (b.lo + b.hi);
    const MembershipResult r = psd_plus_nonnegative(matrix_at(mid), opts);
    ++b.solves;
    const bool member = r.verdict == Membership::member ||
                        (r.verdict == Membership::undecided && r.lower + r.upper >= 0.0);
    if (member == member_high) b.hi = mid;
    else b.lo = mid;
  }
  return b;
}

}  // namespace

Bisection sos_threshold_bisection(const Graph& g, double lo, double hi, double width, const SdpOptions& opts) {
  const int n = g.order();
  const Matrix A = g.adjacency();
  auto at = [&](double k) -> Matrix { return -k * A + (k - 1.0) * Matrix::Ones(n, n); };
  return bisect(lo, hi, width, opts, at, true);
}

Bisection p_sos_bisection(const Graph& g, double width, const SdpOptions& opts) {
  const int n = g.order();
  const Matrix Mp = build_p_g(g).to_matrix();
  auto at = [&](double s) -> Matrix { return Mp - s * Matrix::Ones(n, n); };
  const MembershipResult top = psd_plus_nonnegative(at(0.0), opts);
  if (top.verdict == Membership::member) return Bisection{0.0, 0.0, 1};
  Bisection b = bisect(-1.0, 0.0, width, opts, at, false);
  ++b.solves;
  return b;
}

double p_sos_value(const Graph& g, const SdpOptions& opts) {
  const int w = clique_number(g);
  if (theta_prime_equals_omega_structurally(g)) return 0.0;
  return w / theta_prime(g, opts).value() - 1.0;
}

AimpResult aimp(const Graph& g, int cap, const SdpOptions& opts, Execution exec) {
  const int n = g.order();
  if (n > cap)
    throw ResourceLimitError("aimp: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  AimpResult out;
  ClassCache<double> cache;
  for (int k = 1; k <= n; ++k) {
    const auto subsets = subsets_of_size(n, k);
    const int count = static_cast<int>(subsets.size());
    std::vector<double> ratio(count, 0.0);
    std::vector<char> skipped(count, 0);
    for_each_index(count, exec, [&](int i) {
      const Graph h = induced_subgraph(g, subsets[i]);
      const int w = clique_number(h);
      if (w < 2) {
        skipped[i] = 1;
        return;
      }
      bool solved = false;
      const double ps = cache.get(h, [&](const Graph& c) { return p_sos_value(c, opts); }, solved);
      ratio[i] = 1.0 - ps / (w - 1);
    });
    for (int i = 0; i < count; ++i) {
      ++out.subgraphs;
      if (skipped[i]) {
        ++out.skipped_edgeless;
        continue;
      }
      if (out.argmax.empty() || ratio[i] > out.value) {
        out.value = ratio[i];
        out.argmax = subsets[i];
      }
    }
  }
  return out;
}

namespace {

// Euclidean projection onto {x >= 0, sum x = 1}.
Vector project_simplex(const Vector& y) {
  std::vector<double> u(y.data(), y.data() + y.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, shift = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0) shift = t;
  }
  return (y.array() - shift).cwiseMax(0.0).matrix();
}

}  // namespace

MotzkinStrausReport motzkin_straus_check(const Graph& g, int starts, std::uint64_t seed) {
  const int n = g.order();
  MotzkinStrausReport r;
  const auto clique = maximum_clique(g);
  r.omega = static_cast<int>(clique.size());
  const Matrix Q = Matrix::Ones(n, n) - g.adjacency();  // I + Abar
  Vector xc = Vector::Zero(n);
  for (int v : clique) xc[v] = 1.0 / r.omega;
  r.clique_value = xc.dot(Q * xc);

  const double step = 1.0 / (2.0 * std::max(1.0, linalg::lambda_max(Q)));
  SplitMix64 rng(seed);
  r.best_value = std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = s == 0 ? 1.0 : -std::log(1.0 - rng.uniform());
    x /= x.sum();
    for (int it = 0; it < 5000; ++it) {
      const Vector next = project_simplex(x - step * 2.0 * (Q * x));
      const double moved = (next - x).lpNorm<Eigen::Infinity>();
      x = next;
      if (moved < 1e-13) break;
    }
    const double val = x.dot(Q * x);
    if (val < r.best_value) {
      r.best_value = val;
      r.best_point.assign(x.data(), x.data() + n);
    }
  }
  const double target = 1.0 / r.omega;
  r.passed = r.best_value >= target - 1e-6 && std::abs(r.clique_value - target) <= 1e-12;
  return r;
}

bool unit_shift_expansion_holds(const Graph& g, double k) {
  const Rational kr(k);
  QuarticPoly expected;
  for (int i = 0; i < g.order(); ++i) {
    if (kr != 0) expected[{i, i, i, i}] = kr;
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j) && kr != 0) expected[{i, i, j, j}] = 2 * kr;
  }
  return expand(build_p_gk(g, kr, 1)) == expected;
}

std::optional<HessianWitness> hessian_witness(const Graph& g, double k, double shift) {
  if (g.size() == 0) throw std::invalid_argument("hessian_witness: graph has no edges");
  if (shift >= 1.0) {
    if (!unit_shift_expansion_holds(g, k)) throw std::logic_error("hessian_witness: unit-shift expansion mismatch");
    return std::nullopt;
  }
  HessianWitness w;
  std::tie(w.u, w.v) = g.edges().front();
  w.point.assign(g.order(), 0.0);
  w.point[w.v] = 1.0;
  w.value = hessian(g, k, shift, w.point)(w.u, w.u);
  return w;
}

bool BoundLadder::ordered() const {
  auto le = [this](double a, double b) { return a <= b + 2.0 * tol * (1.0 + std::abs(b)); };
  bool ok = le(omega, theta_prime.upper) && le(theta_prime.lower, theta.upper) && le(theta_prime.lower, gamma.value) &&
            le(gamma.value, tau.value);
  if (chi) ok = ok && le(theta.lower, *chi);
  return ok;
}

BoundLadder bound_ladder(const Graph& g, bool with_chi, const SdpOptions& opts) {
  BoundLadder b;
  b.tol = opts.tol;
  b.omega = clique_number(g);
  b.alpha = independence_number(g);
  if (with_chi && g.order() <= kChromaticCap) b.chi = chromatic_number(g);
  b.theta = theta(g, opts);
  b.theta_prime = theta_prime(g, opts);
  b.gamma = gamma(g);
  b.tau = tau(g);
  b.rho = rho(g);
  const SosTest t = classify(b.omega, b.theta_prime, opts.tol);
  b.sos_verdict = t.verdict;
  b.sos_margin = t.margin;
  return b;
}

}  // namespace sosperfect
