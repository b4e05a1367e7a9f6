#pragma once

#include <optional>

#include <Eigen/Dense>

namespace sosperfect::linalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default psd tolerance; scaled by max(1, ||M||_inf) at each call.
inline constexpr double kPsdTolerance = 1e-8;

/// Real symmetric matrix. The constructor symmetrises its input and rejects
/// anything whose asymmetry exceeds 1e-12 * (1 + ||M||_inf).
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
};

struct EigenDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // column k belongs to values[k]
};

/// Production path (Eigen's tridiagonal QL). Throws NumericError if the
/// solver does not converge or the input is not finite.
EigenDecomposition eigen_symmetric(const Matrix& m);
inline EigenDecomposition eigen_symmetric(const SymmetricMatrix& m) { return eigen_symmetric(m.matrix()); }

/// Reference cyclic Jacobi. Kept independent of Eigen's solver so tests can
/// cross-check the two; throws NumericError after `max_sweeps` sweeps.
EigenDecomposition jacobi_eigen_symmetric(const Matrix& m, int max_sweeps = 100);

double lambda_min(const Matrix& m);
double lambda_max(const Matrix& m);

double inf_norm(const Matrix& m);

/// True iff lambda_min(m) >= -tol * max(1, ||m||_inf). Tries a Cholesky
/// factorisation of the shifted matrix first and falls back to eigenvalues.
bool is_psd(const Matrix& m, double tol = kPsdTolerance);

/// Row diagonal dominance: m_ii >= sum_{j != i} |m_ij| - tol.
bool is_dd(const Matrix& m, double tol = 0.0);

/// Positive diagonal scaling d with diag(d) m diag(d) diagonally dominant,
/// if one exists. Built per connected block of the off-diagonal support
/// from the Perron vector of the comparison matrix; rows with a zero
/// diagonal must have a zero off-diagonal part.
std::optional<Vector> sdd_scaling(const Matrix& m, double tol = kPsdTolerance);

/// Scaled diagonal dominance, decided through sdd_scaling and then
/// re-checked with is_dd on the scaled matrix.
bool is_sdd(const Matrix& m, double tol = kPsdTolerance);

/// Frobenius inner product <a, b>.
inline double inner(const Matrix& a, const Matrix& b) { return (a.array() * b.array()).sum(); }

/// Euclidean projection onto the psd cone.
Matrix project_psd(const Matrix& m);

}  // namespace sosperfect::linalg
