#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sosperfect/graph.hpp"
#include "sosperfect/linalg.hpp"

namespace sosperfect {

using Rational = boost::multiprecision::cpp_rational;

/// p(x) = sum_{i,j} M_ij x_i^2 x_j^2 with M symmetric and rational. Only
/// forms of this shape are representable.
class QuarticSquareForm {
 public:
  QuarticSquareForm() = default;
  /// Row-major n x n coefficients; throws std::invalid_argument unless
  /// square and symmetric.
  QuarticSquareForm(int n, std::vector<Rational> coefficients);

  int n() const { return n_; }
  const Rational& operator()(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }
  linalg::Matrix to_matrix() const;

  /// Coefficient of the monomial x_i^2 x_j^2: M_ii if i == j, else 2 M_ij.
  Rational monomial_coefficient(int i, int j) const;

  bool operator==(const QuarticSquareForm& o) const = default;

  /// One line per nonzero monomial, i <= j in row-major order:
  ///     c * x{i}^2 x{j}^2
  /// with c an exact rational ("-4", "3/2") and 0-indexed variables.
  std::string canonical_text() const;

 private:
  int n_ = 0;
  std::vector<Rational> m_;
};

/// M = -k A + (k - 1 + shift) J. shift = 0 gives p_{G,k}.
QuarticSquareForm build_p_gk(const Graph& g, const Rational& k, const Rational& shift = 0);
/// p_{G, omega(G)}.
QuarticSquareForm build_p_g(const Graph& g);

/// Evaluates exactly in rationals (every double is a dyadic rational) and
/// rounds once at the end. Throws std::invalid_argument on size mismatch.
double evaluate(const QuarticSquareForm& p, std::span<const double> x);
/// Direct polynomial formula -2k sum_{ij in E} x_i^2 x_j^2 + (k-1+shift)
/// (sum x_i^2)^2 in floating point; independent of the matrix route.
double evaluate_formula(const Graph& g, double k, double shift, std::span<const double> x);

/// Hessian of sum M_ab x_a^2 x_b^2: H_ab = 8 M_ab x_a x_b for a != b and
/// H_aa = 4 sum_b M_ab x_b^2 + 8 M_aa x_a^2.
linalg::Matrix hessian(const linalg::Matrix& M, std::span<const double> x);
/// Hessian of p_{G,k,shift}.
linalg::Matrix hessian(const Graph& g, double k, double shift, std::span<const double> x);

/// Sets the variables outside s to zero: the principal submatrix on s, with
/// variable i of the result being s[i]. Throws on empty or invalid s.
QuarticSquareForm restrict_to_subset(const QuarticSquareForm& p, std::span<const Vertex> s);

/// Quadratic form in the x_i x_j monomials (i <= j); key (i, i) is x_i^2.
using QuadraticPoly = std::map<std::pair<int, int>, Rational>;
/// Quartic polynomial keyed by the sorted variable indices of each monomial.
using QuarticPoly = std::map<std::array<int, 4>, Rational>;

QuarticPoly expand_square(const QuadraticPoly& q);
/// Monomial expansion of a QuarticSquareForm.
QuarticPoly expand(const QuarticSquareForm& p);

struct SosTerm {
  Rational coefficient;  // >= 0
  QuadraticPoly q;
};

/// sum_t c_t q_t^2, together with the form it is claimed to equal.
struct SosDecomposition {
  std::vector<SosTerm> terms;
  QuarticSquareForm target;

  QuarticPoly expansion() const;
  /// True iff every coefficient is nonnegative and the expansion equals the
  /// target exactly.
  bool verify() const;
};

enum class CompleteVariant { pairwise, telescoping };
const char* to_string(CompleteVariant v);

/// Decompositions of p_{K_n}:
///   pairwise     sum_{i<j} (x_i^2 - x_j^2)^2
///   telescoping  sum_{i=1}^{n-1} n / ((n-i+1)(n-i)) ((n-i) x_i^2 - sum_{j>i} x_j^2)^2
/// Throws std::invalid_argument for n < 2.
SosDecomposition sos_decompose_complete(int n, CompleteVariant variant);

/// For bipartite g with side[v] in {0, 1}:
///   (sum_A x_i^2 - sum_B x_i^2)^2 + sum_{i in A, j in B, ij not in E} (2 x_i x_j)^2
/// Throws std::invalid_argument if `side` is not a bipartition of g.
SosDecomposition sos_decompose_bipartite(const Graph& g, std::span<const int> side);

/// Text for a decomposition, one term per line: "c * (q)^2".
std::string to_text(const SosDecomposition& d);
std::string to_text(const QuadraticPoly& q);

}  // namespace sosperfect
