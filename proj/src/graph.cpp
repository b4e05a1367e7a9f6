#include "sosperfect/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <queue>

namespace sosperfect {

void VertexSet::fill() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (n_ % 64 != 0 && !words_.empty()) words_.back() = (std::uint64_t{1} << (n_ % 64)) - 1;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= n_) return -1;
  std::size_t wi = start >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
    if (++wi >= words_.size()) return -1;
    w = words_[wi];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  rows_.assign(n, VertexSet(n));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("graph: self-loop");
    rows_[a].set(b);
    rows_[b].set(a);
  }
  degrees_.assign(n, 0);
  adjacency_ = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    degrees_[i] = rows_[i].count();
    for (int j = rows_[i].next(i); j >= 0; j = rows_[i].next(j)) {
      edges_.emplace_back(i, j);
      adjacency_(i, j) = adjacency_(j, i) = 1.0;
    }
  }
}

int Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

int Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  const int n = g.order();
  e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  VertexSet seen(g.order());
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (seen.test(v)) throw std::invalid_argument("induced_subgraph: repeated vertex");
    seen.set(v);
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(s.size()), e);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  return induced_subgraph(g, m);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<Edge> e(g1.edges());
  for (auto [a, b] : g2.edges()) e.emplace_back(n1 + a, n1 + b);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) e.emplace_back(i, n1 + j);
  return Graph(n1 + n2, e);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> e(g1.edges());
  for (auto [a, b] : g2.edges()) e.emplace_back(n1 + a, n1 + b);
  return Graph(n1 + g2.order(), e);
}

Graph strong_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<Edge> e;
  auto id = [n2](int a1, int a2) { return a1 * n2 + a2; };
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
          if (id(a1, a2) >= id(b1, b2)) continue;
          bool eq1 = a1 == b1, eq2 = a2 == b2;
          bool adj1 = !eq1 && g1.adjacent(a1, b1);
          bool adj2 = !eq2 && g2.adjacent(a2, b2);
          if ((eq1 && adj2) || (adj1 && eq2) || (adj1 && adj2)) e.emplace_back(id(a1, a2), id(b1, b2));
        }
  return Graph(n1 * n2, e);
}

Graph replicate_vertex(const Graph& g, Vertex v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("replicate_vertex: vertex out of range");
  std::vector<Edge> e(g.edges());
  e.emplace_back(v, n);
  for (Vertex u : g.neighbours(v).members()) e.emplace_back(u, n);
  return Graph(n + 1, e);
}

Graph mycielskian(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> e(g.edges());
  for (auto [a, b] : g.edges()) {
    e.emplace_back(n + a, b);
    e.emplace_back(n + b, a);
  }
  for (int i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
  return Graph(2 * n + 1, e);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
  return Graph(g.order(), e);
}

namespace {

// Ordered partition refinement: split cells by the number of neighbours in
// each cell until stable. The resulting cell order is an isomorphism
// invariant, so canonical relabellings only permute within cells.
std::vector<std::vector<int>> equitable_cells(const Graph& g) {
  const int n = g.order();
  std::vector<int> cell(n, 0);
  int ncells = 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> counts(ncells, 0);
      for (int u : g.neighbours(v).members()) ++counts[cell[u]];
      std::vector<int> key{cell[v]};
      key.insert(key.end(), counts.begin(), counts.end());
      sig[v] = {key, v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    int nn = static_cast<int>(keys.size());
    cell = next;
    if (nn == ncells) break;
    ncells = nn;
  }
  std::vector<std::vector<int>> cells(ncells);
  for (int v = 0; v < n; ++v) cells[cell[v]].push_back(v);
  return cells;
}

}  // namespace

std::string canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw ResourceLimitError("canonical_code: limited to n <= 10");
  auto cells = equitable_cells(g);
  // order[k] = vertex placed at position k.
  std::vector<int> order;
  for (auto& c : cells) order.insert(order.end(), c.begin(), c.end());
  std::vector<std::size_t> starts;
  std::size_t acc = 0;
  for (auto& c : cells) {
    starts.push_back(acc);
    acc += c.size();
  }
  std::string best;
  std::string code(static_cast<std::size_t>(n) * (n - 1) / 2, '0');
  // Iterate the product of per-cell permutations.
  std::vector<std::vector<int>> perms = cells;
  while (true) {
    std::size_t k = 0;
    std::vector<int> pos;
    for (auto& p : perms) pos.insert(pos.end(), p.begin(), p.end());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code[k++] = g.adjacent(pos[i], pos[j]) ? '1' : '0';
    if (best.empty() || code > best) best = code;
    std::size_t c = 0;
    for (; c < perms.size(); ++c) {
      if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
    }
    if (c == perms.size()) break;
  }
  return std::to_string(n) + ":" + best;
}

Graph graph_from_canonical_code(const std::string& code) {
  const auto colon = code.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("graph_from_canonical_code: missing ':'");
  const int n = std::stoi(code.substr(0, colon));
  const std::string bits = code.substr(colon + 1);
  if (n < 0 || bits.size() != static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2)
    throw std::invalid_argument("graph_from_canonical_code: wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bits[k++] == '1') edges.emplace_back(i, j);
  return Graph(n, edges);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members;
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      members.push_back(v);
      for (int u : g.neighbours(v).members())
        if (comp[u] < 0) {
          comp[u] = comp[s];
          q.push(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbours(v).members()) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace sosperfect
