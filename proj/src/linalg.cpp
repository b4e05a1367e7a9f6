#include "sosperfect/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sosperfect/errors.hpp"

namespace sosperfect::linalg {

double inf_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

SymmetricMatrix::SymmetricMatrix(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymmetricMatrix: matrix is not square");
  const double asym = m.size() ? (m - m.transpose()).cwiseAbs().maxCoeff() : 0.0;
  if (asym > 1e-12 * (1.0 + inf_norm(m))) throw std::invalid_argument("SymmetricMatrix: matrix is not symmetric");
  m_ = 0.5 * (m + m.transpose());
}

EigenDecomposition eigen_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_symmetric: matrix is not square");
  if (!m.allFinite()) throw NumericError("eigen_symmetric: non-finite input");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) throw NumericError("eigen_symmetric: QL iteration did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

EigenDecomposition jacobi_eigen_symmetric(const Matrix& m, int max_sweeps) {
  const int n = static_cast<int>(m.rows());
  if (m.rows() != m.cols()) throw std::invalid_argument("jacobi_eigen_symmetric: matrix is not square");
  if (!m.allFinite()) throw NumericError("jacobi_eigen_symmetric: non-finite input");
  Matrix a = 0.5 * (m + m.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(a.norm(), 1e-300);
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-15 * scale) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) throw NumericError("jacobi_eigen_symmetric: sweep limit reached");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  EigenDecomposition out{Vector(n), Matrix(n, n)};
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(idx[k], idx[k]);
    out.vectors.col(k) = v.col(idx[k]);
  }
  return out;
}

double lambda_min(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("lambda_min: QL iteration did not converge");
  return es.eigenvalues()[0];
}

double lambda_max(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("lambda_max: QL iteration did not converge");
  return es.eigenvalues()[m.rows() - 1];
}

bool is_psd(const Matrix& m, double tol) {
  if (tol < 0) throw std::invalid_argument("is_psd: negative tolerance");
  const double eff = tol * std::max(1.0, inf_norm(m));
  const Matrix shifted = m + eff * Matrix::Identity(m.rows(), m.cols());
  Eigen::LLT<Matrix> llt(shifted);
  if (llt.info() == Eigen::Success) return true;
  return lambda_min(m) >= -eff;
}

bool is_dd(const Matrix& m, double tol) {
  for (int i = 0; i < m.rows(); ++i) {
    double off = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
    if (m(i, i) < off - tol) return false;
  }
  return true;
}

std::optional<Vector> sdd_scaling(const Matrix& m, double tol) {
  const int n = static_cast<int>(m.rows());
  const double eff = tol * std::max(1.0, inf_norm(m));
  Vector d = Vector::Ones(n);
  std::vector<int> live;
  for (int i = 0; i < n; ++i) {
    if (m(i, i) < -eff) return std::nullopt;
    if (m(i, i) <= eff) {
      for (int j = 0; j < n; ++j)
        if (j != i && std::abs(m(i, j)) > eff) return std::nullopt;
    } else {
      live.push_back(i);
    }
  }
  // Connected blocks of the off-diagonal support among live rows.
  std::vector<int> block(n, -1);
  int nblocks = 0;
  for (int s : live) {
    if (block[s] >= 0) continue;
    std::vector<int> stack{s};
    block[s] = nblocks;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : live)
        if (block[u] < 0 && m(v, u) != 0.0) {
          block[u] = nblocks;
          stack.push_back(u);
        }
    }
    ++nblocks;
  }
  for (int b = 0; b < nblocks; ++b) {
    std::vector<int> idx;
    for (int i : live)
      if (block[i] == b) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    Matrix comparison(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c)
        comparison(r, c) = r == c ? m(idx[r], idx[r]) : -std::abs(m(idx[r], idx[c]));
    auto ed = eigen_symmetric(comparison);
    if (ed.values[0] < -eff) return std::nullopt;
    Vector perron = ed.vectors.col(0).cwiseAbs();
    perron /= perron.maxCoeff();
    for (int r = 0; r < k; ++r) d[idx[r]] = std::max(perron[r], 1e-300);
  }
  return d;
}

bool is_sdd(const Matrix& m, double tol) {
  auto d = sdd_scaling(m, tol);
  if (!d) return false;
  const Matrix scaled = d->asDiagonal() * m * d->asDiagonal();
  return is_dd(scaled, tol * std::max(1.0, inf_norm(m)));
}

Matrix project_psd(const Matrix& m) {
  auto ed = eigen_symmetric(m);
  Vector clipped = ed.values.cwiseMax(0.0);
  return ed.vectors * clipped.asDiagonal() * ed.vectors.transpose();
}

}  // namespace sosperfect::linalg
