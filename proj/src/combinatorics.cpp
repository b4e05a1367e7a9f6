#include "sosperfect/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sosperfect {

namespace {

// Greedy sequential colouring of P in ascending vertex order. On return
// order[i] has colour bound[i] (1-based) and bound is nondecreasing.
void colour_sort(const Graph& g, const VertexSet& P, std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  VertexSet uncoloured = P;
  int colour = 0;
  while (!uncoloured.empty()) {
    ++colour;
    VertexSet candidates = uncoloured;
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
      order.push_back(v);
      bound.push_back(colour);
      uncoloured.reset(v);
      candidates.subtract(g.neighbours(v));
    }
  }
}

class CliqueSearch {
 public:
  // target < 0: find one maximum clique. target >= 0: enumerate every
  // clique of exactly that size.
  CliqueSearch(const Graph& g, int target) : g_(g), target_(target) {}

  void run() {
    VertexSet all(g_.order());
    all.fill();
    if (g_.order() > 0) expand(all);
  }

  std::vector<Vertex> best;
  std::vector<std::vector<Vertex>> found;

 private:
  void expand(VertexSet P) {
    std::vector<int> order, bound;
    colour_sort(g_, P, order, bound);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      const int reach = static_cast<int>(cur_.size()) + bound[idx];
      if (target_ < 0 ? reach <= static_cast<int>(best.size()) : reach < target_) return;
      const int v = order[idx];
      cur_.push_back(v);
      if (target_ >= 0 && static_cast<int>(cur_.size()) == target_) {
        auto c = cur_;
        std::sort(c.begin(), c.end());
        found.push_back(std::move(c));
      } else {
        VertexSet next = P & g_.neighbours(v);
        if (next.empty()) {
          if (target_ < 0 && cur_.size() > best.size()) best = cur_;
        } else {
          expand(next);
        }
      }
      cur_.pop_back();
      P.reset(v);
    }
  }

  const Graph& g_;
  int target_;
  std::vector<Vertex> cur_;
};

// Backtracking k-colouring in DSATUR order. colour[v] = -1 when uncoloured.
class Colourer {
 public:
  Colourer(const Graph& g, int k)
      : g_(g), k_(k), colour_(g.order(), -1), counts_(static_cast<std::size_t>(g.order()) * k, 0) {}

  bool run() { return step(0, 0); }
  const std::vector<int>& colours() const { return colour_; }

 private:
  bool step(int coloured, int used) {
    const int n = g_.order();
    if (coloured == n) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = __builtin_popcount(forbidden_mask(v));
      int deg = 0;
      for (int u = g_.neighbours(v).first(); u >= 0; u = g_.neighbours(v).next(u))
        if (colour_[u] < 0) ++deg;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (best_sat >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden_mask(pick) >> c & 1u) continue;
      assign(pick, c, +1);
      if (step(coloured + 1, std::max(used, c + 1))) return true;
      assign(pick, c, -1);
    }
    return false;
  }

  std::uint32_t forbidden_mask(int v) const {
    std::uint32_t mask = 0;
    for (int c = 0; c < k_; ++c)
      if (counts_at(v, c) > 0) mask |= 1u << c;
    return mask;
  }
  int counts_at(int v, int c) const { return counts_[static_cast<std::size_t>(v) * k_ + c]; }

  void assign(int v, int c, int delta) {
    colour_[v] = delta > 0 ? c : -1;
    for (int u = g_.neighbours(v).first(); u >= 0; u = g_.neighbours(v).next(u))
      counts_[static_cast<std::size_t>(u) * k_ + c] += delta;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colour_;
  std::vector<int> counts_;  // counts_[v * k + c]: neighbours of v coloured c
};

std::vector<int> greedy_dsatur(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (int step = 0; step < n; ++step) {
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      std::vector<char> seen(n + 1, 0);
      int sat = 0;
      for (int u = g.neighbours(v).first(); u >= 0; u = g.neighbours(v).next(u))
        if (colour[u] >= 0 && !seen[colour[u]]) seen[colour[u]] = 1, ++sat;
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = g.degree(v);
      }
    }
    std::vector<char> taken(n + 1, 0);
    for (int u = g.neighbours(pick).first(); u >= 0; u = g.neighbours(pick).next(u))
      if (colour[u] >= 0) taken[colour[u]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    colour[pick] = c;
  }
  return colour;
}

// Smallest sorted vertex set carrying an induced odd cycle of length L in g,
// together with the cycle order; empty when there is none. The smallest
// cycle vertex is the start s, and p1 < p_{L-1} fixes the direction.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, int length) : g_(g), length_(length), on_path_(g.order()) {}

  std::optional<std::vector<Vertex>> run() {
    for (int s = 0; s < g_.order(); ++s) {
      path_ = {s};
      on_path_ = VertexSet(g_.order());
      on_path_.set(s);
      extend(s);
    }
    return best_cycle_;
  }

 private:
  void extend(int s) {
    const int k = static_cast<int>(path_.size());
    const int last = path_.back();
    const VertexSet& nb = g_.neighbours(last);
    for (int v = nb.next(s); v >= 0; v = nb.next(v)) {
      if (on_path_.test(v)) continue;
      // v may touch only `last` among the interior, and s only when closing.
      bool chord = false;
      for (int i = 1; i + 1 < k; ++i)
        if (g_.adjacent(v, path_[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      const bool closes = k >= 2 && g_.adjacent(v, s);
      if (k + 1 == length_) {
        if (closes && v > path_[1]) record(v);
        continue;
      }
      if (closes) continue;
      path_.push_back(v);
      on_path_.set(v);
      extend(s);
      on_path_.reset(v);
      path_.pop_back();
    }
  }

  void record(int v) {
    auto cyc = path_;
    cyc.push_back(v);
    auto key = cyc;
    std::sort(key.begin(), key.end());
    if (!best_key_ || key < *best_key_) {
      best_key_ = key;
      best_cycle_ = cyc;
    }
  }

  const Graph& g_;
  int length_;
  std::vector<int> path_;
  VertexSet on_path_;
  std::optional<std::vector<Vertex>> best_key_;
  std::optional<std::vector<Vertex>> best_cycle_;
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

bool omega_equals_chi(const Graph& h) { return clique_number(h) == chromatic_number(h, kDefinitionScanCap); }

}  // namespace

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

std::vector<Vertex> maximum_clique(const Graph& g) {
  CliqueSearch search(g, -1);
  search.run();
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

std::vector<int> optimal_colouring(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap)
    throw ResourceLimitError("chromatic_number: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n == 0) return {};
  auto upper = greedy_dsatur(g);
  const int ub = *std::max_element(upper.begin(), upper.end()) + 1;
  for (int k = clique_number(g); k < ub; ++k) {
    Colourer c(g, k);
    if (c.run()) return c.colours();
  }
  return upper;
}

int chromatic_number(const Graph& g, int cap) {
  auto c = optimal_colouring(g, cap);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

double MaxCliqueMatrix::lambda1() const { return linalg::lambda_min(rows.transpose() * rows); }

MaxCliqueMatrix maximum_cliques(const Graph& g) {
  MaxCliqueMatrix out;
  out.n = g.order();
  out.omega = clique_number(g);
  CliqueSearch search(g, out.omega);
  if (out.omega > 0) search.run();
  out.cliques = std::move(search.found);
  std::sort(out.cliques.begin(), out.cliques.end());
  out.m = static_cast<int>(out.cliques.size());
  out.rows = linalg::Matrix::Zero(out.m, out.n);
  for (int r = 0; r < out.m; ++r)
    for (int v : out.cliques[r]) out.rows(r, v) = 1.0;
  return out;
}

bool OddHoleWitness::verify(const Graph& g) const {
  const int len = static_cast<int>(cycle.size());
  if (len < 5 || len % 2 == 0) return false;
  for (int v : cycle)
    if (v < 0 || v >= g.order()) return false;
  auto sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b) {
      const bool consecutive = b == a + 1 || (a == 0 && b == len - 1);
      const bool edge = g.adjacent(cycle[a], cycle[b]) != antihole;
      if (edge != consecutive) return false;
    }
  return true;
}

std::optional<OddHoleWitness> find_odd_hole_or_antihole(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap)
    throw ResourceLimitError("find_odd_hole_or_antihole: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
  const Graph gc = complement(g);
  for (int len = 5; len <= n; len += 2) {
    auto hole = HoleSearch(g, len).run();
    auto anti = HoleSearch(gc, len).run();
    if (!hole && !anti) continue;
    auto key = [](const std::vector<Vertex>& c) {
      auto k = c;
      std::sort(k.begin(), k.end());
      return k;
    };
    if (hole && (!anti || key(*hole) <= key(*anti))) return OddHoleWitness{*hole, false};
    return OddHoleWitness{*anti, true};
  }
  return std::nullopt;
}

const char* to_string(PerfectnessMethod m) {
  return m == PerfectnessMethod::spgt_scan ? "spgt_scan" : "definition_scan";
}

bool PerfectnessVerdict::verify(const Graph& g) const {
  if (perfect) return !hole && !subgraph;
  if (hole) return hole->verify(g);
  if (subgraph) {
    if (subgraph->empty()) return false;
    return !omega_equals_chi(induced_subgraph(g, *subgraph));
  }
  return false;
}

PerfectnessVerdict is_perfect(const Graph& g, PerfectnessMethod method, Execution exec) {
  PerfectnessVerdict v;
  v.method = method;
  if (method == PerfectnessMethod::spgt_scan) {
    v.hole = find_odd_hole_or_antihole(g);
    v.perfect = !v.hole;
    return v;
  }
  const int n = g.order();
  if (n > kDefinitionScanCap)
    throw ResourceLimitError("definition_scan: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kDefinitionScanCap));
  for (int k = 1; k <= n; ++k) {
    const auto subsets = subsets_of_size(n, k);
    const int count = static_cast<int>(subsets.size());
    int first_bad = count;
    if (exec == Execution::serial) {
      for (int i = 0; i < count; ++i)
        if (!omega_equals_chi(induced_subgraph(g, subsets[i]))) {
          first_bad = i;
          break;
        }
    } else {
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
      for (int i = 0; i < count; ++i)
        if (!omega_equals_chi(induced_subgraph(g, subsets[i]))) first_bad = std::min(first_bad, i);
    }
    if (first_bad < count) {
      v.perfect = false;
      v.subgraph = subsets[first_bad];
      return v;
    }
  }
  return v;
}

SdpProblem theta_problem(const Graph& g, bool nonnegative) {
  SdpProblem p;
  p.n = g.order();
  p.require_nonnegative = nonnegative;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (!g.adjacent(i, j)) p.zero_pattern.emplace_back(i, j);
  return p;
}

std::optional<PartitionableCertificate> partitionable_certificate(const Graph& g, double tol) {
  PartitionableCertificate cert;
  cert.cliques = maximum_cliques(g);
  const auto& C = cert.cliques;
  const int n = g.order();
  if (n == 0 || C.m != n) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (C.rows.col(v).sum() != C.omega) return std::nullopt;
  const linalg::Matrix CtC = C.rows.transpose() * C.rows;
  cert.lambda1 = linalg::lambda_min(CtC);
  // C^T C is singular exactly when C is.
  if (cert.lambda1 <= 1e-9 * C.omega) return std::nullopt;
  const double w = C.omega;
  if (w - cert.lambda1 <= 1e-9) return std::nullopt;
  cert.lower_bound = (w * w - cert.lambda1) / (w - cert.lambda1);
  cert.X = (CtC - cert.lambda1 * linalg::Matrix::Identity(n, n)) / (n * (w - cert.lambda1));
  cert.residuals = verify_feasible(theta_problem(g, true), cert.X, tol);
  return cert;
}

}  // namespace sosperfect
