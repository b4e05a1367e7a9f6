#include "sosperfect/polynomials.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sosperfect/combinatorics.hpp"
#include "sosperfect/generators.hpp"

namespace sosperfect {

namespace {

std::array<int, 4> monomial_key(int a, int b, int c, int d) {
  std::array<int, 4> k{a, b, c, d};
  std::sort(k.begin(), k.end());
  return k;
}

void add_to(QuarticPoly& p, const std::array<int, 4>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

void check_size(int n, std::size_t got, const char* who) {
  if (static_cast<std::size_t>(n) != got) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

QuarticSquareForm::QuarticSquareForm(int n, std::vector<Rational> coefficients) : n_(n), m_(std::move(coefficients)) {
  if (n < 0 || m_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("QuarticSquareForm: coefficient array is not n x n");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("QuarticSquareForm: matrix is not symmetric");
}

linalg::Matrix QuarticSquareForm::to_matrix() const {
  linalg::Matrix out(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = static_cast<double>((*this)(i, j));
  return out;
}

Rational QuarticSquareForm::monomial_coefficient(int i, int j) const {
  return i == j ? (*this)(i, i) : Rational(2 * (*this)(i, j));
}

std::string QuarticSquareForm::canonical_text() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      const Rational c = monomial_coefficient(i, j);
      if (c != 0) out << c.str() << " * x" << i << "^2 x" << j << "^2\n";
    }
  return out.str();
}

QuarticSquareForm build_p_gk(const Graph& g, const Rational& k, const Rational& shift) {
  const int n = g.order();
  const Rational off = k - 1 + shift;
  std::vector<Rational> m(static_cast<std::size_t>(n) * n, off);
  for (auto [i, j] : g.edges()) {
    m[static_cast<std::size_t>(i) * n + j] = off - k;
    m[static_cast<std::size_t>(j) * n + i] = off - k;
  }
  return QuarticSquareForm(n, std::move(m));
}

QuarticSquareForm build_p_g(const Graph& g) { return build_p_gk(g, clique_number(g)); }

double evaluate(const QuarticSquareForm& p, std::span<const double> x) {
  check_size(p.n(), x.size(), "evaluate");
  std::vector<Rational> sq(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational xi(x[i]);
    sq[i] = xi * xi;
  }
  Rational total = 0;
  for (int i = 0; i < p.n(); ++i) {
    Rational row = 0;
    for (int j = 0; j < p.n(); ++j) row += p(i, j) * sq[j];
    total += row * sq[i];
  }
  return static_cast<double>(total);
}

double evaluate_formula(const Graph& g, double k, double shift, std::span<const double> x) {
  check_size(g.order(), x.size(), "evaluate_formula");
  double edges = 0.0, norm2 = 0.0;
  for (auto [i, j] : g.edges()) edges += x[i] * x[i] * x[j] * x[j];
  for (double v : x) norm2 += v * v;
  return -2.0 * k * edges + (k - 1.0 + shift) * norm2 * norm2;
}

linalg::Matrix hessian(const linalg::Matrix& M, std::span<const double> x) {
  const int n = static_cast<int>(M.rows());
  check_size(n, x.size(), "hessian");
  linalg::Vector sq(n);
  for (int i = 0; i < n; ++i) sq[i] = x[i] * x[i];
  const linalg::Vector row = M * sq;
  linalg::Matrix H(n, n);
  for (int a = 0; a < n; ++a) {
    H(a, a) = 4.0 * row[a] + 8.0 * M(a, a) * sq[a];
    for (int b = a + 1; b < n; ++b) H(a, b) = H(b, a) = 8.0 * M(a, b) * x[a] * x[b];
  }
  return H;
}

linalg::Matrix hessian(const Graph& g, double k, double shift, std::span<const double> x) {
  const int n = g.order();
  linalg::Matrix M = linalg::Matrix::Constant(n, n, k - 1.0 + shift) - k * g.adjacency();
  return hessian(M, x);
}

QuarticSquareForm restrict_to_subset(const QuarticSquareForm& p, std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("restrict_to_subset: empty subset");
  std::vector<char> seen(p.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= p.n()) throw std::invalid_argument("restrict_to_subset: vertex out of range");
    if (seen[v]++) throw std::invalid_argument("restrict_to_subset: repeated vertex");
  }
  const int k = static_cast<int>(s.size());
  std::vector<Rational> m;
  m.reserve(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m.push_back(p(s[a], s[b]));
  return QuarticSquareForm(k, std::move(m));
}

QuarticPoly expand_square(const QuadraticPoly& q) {
  QuarticPoly out;
  for (const auto& [u, cu] : q)
    for (const auto& [v, cv] : q) add_to(out, monomial_key(u.first, u.second, v.first, v.second), cu * cv);
  return out;
}

QuarticPoly expand(const QuarticSquareForm& p) {
  QuarticPoly out;
  for (int i = 0; i < p.n(); ++i)
    for (int j = i; j < p.n(); ++j) add_to(out, monomial_key(i, i, j, j), p.monomial_coefficient(i, j));
  return out;
}

QuarticPoly SosDecomposition::expansion() const {
  QuarticPoly out;
  for (const auto& t : terms)
    for (const auto& [key, c] : expand_square(t.q)) add_to(out, key, t.coefficient * c);
  return out;
}

bool SosDecomposition::verify() const {
  for (const auto& t : terms)
    if (t.coefficient < 0) return false;
  return expansion() == expand(target);
}

const char* to_string(CompleteVariant v) { return v == CompleteVariant::pairwise ? "pairwise" : "telescoping"; }

SosDecomposition sos_decompose_complete(int n, CompleteVariant variant) {
  if (n < 2) throw std::invalid_argument("sos_decompose_complete: n must be at least 2");
  SosDecomposition d;
  d.target = build_p_gk(complete(n), n);
  if (variant == CompleteVariant::pairwise) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d.terms.push_back({1, {{{i, i}, 1}, {{j, j}, -1}}});
    return d;
  }
  for (int i = 1; i < n; ++i) {
    SosTerm t;
    t.coefficient = Rational(n, (n - i + 1) * (n - i));
    t.q[{i - 1, i - 1}] = n - i;
    for (int j = i; j < n; ++j) t.q[{j, j}] = -1;
    d.terms.push_back(std::move(t));
  }
  return d;
}

SosDecomposition sos_decompose_bipartite(const Graph& g, std::span<const int> side) {
  const int n = g.order();
  if (static_cast<int>(side.size()) != n) throw std::invalid_argument("sos_decompose_bipartite: side has wrong size");
  for (int s : side)
    if (s != 0 && s != 1) throw std::invalid_argument("sos_decompose_bipartite: sides must be 0 or 1");
  for (auto [i, j] : g.edges())
    if (side[i] == side[j]) throw std::invalid_argument("sos_decompose_bipartite: not a bipartition of g");
  SosDecomposition d;
  d.target = build_p_g(g);
  // With no edges p_G is identically zero.
  if (g.size() == 0) return d;
  SosTerm main{1, {}};
  for (int v = 0; v < n; ++v) main.q[{v, v}] = side[v] == 0 ? 1 : -1;
  d.terms.push_back(std::move(main));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (side[i] != side[j] && !g.adjacent(i, j)) d.terms.push_back({1, {{{i, j}, 2}}});
  return d;
}

std::string to_text(const QuadraticPoly& q) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : q) {
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) out << a.str() << " * ";
    if (mono.first == mono.second) out << "x" << mono.first << "^2";
    else out << "x" << mono.first << " x" << mono.second;
  }
  if (first) out << "0";
  return out.str();
}

std::string to_text(const SosDecomposition& d) {
  std::ostringstream out;
  for (const auto& t : d.terms) out << t.coefficient.str() << " * (" << to_text(t.q) << ")^2\n";
  return out.str();
}

}  // namespace sosperfect
