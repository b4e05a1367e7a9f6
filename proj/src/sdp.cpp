#include "sosperfect/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sosperfect {

using linalg::Matrix;
using linalg::Vector;

namespace {

std::vector<Edge> normalised_pattern(const SdpProblem& p) {
  std::vector<Edge> out;
  out.reserve(p.zero_pattern.size());
  for (auto [i, j] : p.zero_pattern) out.emplace_back(std::min(i, j), std::max(i, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Makes X exactly feasible: pattern zeroed, negatives clipped, a multiple of
// I added to reach psd, then rescaled to the required trace. Returns false if
// nothing usable is left.
bool repair_primal(const SdpProblem& p, const std::vector<Edge>& pattern, Matrix& X) {
  X = (0.5 * (X + X.transpose())).eval();
  for (auto [i, j] : pattern) X(i, j) = X(j, i) = 0.0;
  if (p.require_nonnegative) X = X.cwiseMax(0.0);
  const double lmin = linalg::lambda_min(X);
  if (lmin < 0) X.diagonal().array() -= lmin;
  const double tr = X.trace();
  if (!(tr > 0) || !std::isfinite(tr)) return false;
  X *= p.trace_value / tr;
  return true;
}

}  // namespace

const char* to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::max_iter: return "max_iter";
    case SdpStatus::infeasible_numerics: return "infeasible_numerics";
    case SdpStatus::stopped: return "stopped";
  }
  return "?";
}

Matrix SdpProblem::objective_matrix() const {
  return objective ? *objective : Matrix::Ones(n, n);
}

void SdpProblem::validate() const {
  if (n < 1) throw std::invalid_argument("SdpProblem: n must be positive");
  if (!(trace_value > 0)) throw std::invalid_argument("SdpProblem: trace_value must be positive");
  for (auto [i, j] : zero_pattern) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("SdpProblem: pattern index out of range");
    if (i == j) throw std::invalid_argument("SdpProblem: diagonal entry in zero pattern");
  }
  if (objective) {
    if (objective->rows() != n || objective->cols() != n)
      throw std::invalid_argument("SdpProblem: objective has wrong dimension");
    linalg::SymmetricMatrix check(*objective);
  }
}

PrimalResiduals verify_feasible(const SdpProblem& p, const Matrix& X, double tol) {
  p.validate();
  if (X.rows() != p.n || X.cols() != p.n) throw std::invalid_argument("verify_feasible: dimension mismatch");
  PrimalResiduals r;
  r.symmetry = (X - X.transpose()).cwiseAbs().maxCoeff();
  const Matrix Xs = 0.5 * (X + X.transpose());
  r.trace = std::abs(Xs.trace() - p.trace_value);
  for (auto [i, j] : p.zero_pattern) r.pattern = std::max(r.pattern, std::abs(Xs(i, j)));
  r.min_eigenvalue = linalg::lambda_min(Xs);
  r.min_entry = Xs.minCoeff();
  r.objective = linalg::inner(p.objective_matrix(), Xs);
  r.feasible = r.symmetry <= tol && r.trace <= tol && r.pattern <= tol && r.min_eigenvalue >= -tol &&
               (!p.require_nonnegative || r.min_entry >= -tol);
  return r;
}

double check_dual_certificate(const SdpProblem& p, const Matrix& B) {
  p.validate();
  if (B.rows() != p.n || B.cols() != p.n) throw std::invalid_argument("check_dual_certificate: dimension mismatch");
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!B.allFinite() || (B - B.transpose()).cwiseAbs().maxCoeff() != 0.0) return inf;
  Matrix D = B - p.objective_matrix();
  for (auto [i, j] : p.zero_pattern) D(i, j) = D(j, i) = 0.0;
  if (!p.require_nonnegative) {
    // Without the nonnegativity constraint there is no Z: B must equal C
    // outside the pattern.
    if (D.cwiseAbs().maxCoeff() != 0.0) return inf;
  } else if (D.minCoeff() < 0.0) {
    return inf;
  }
  return p.trace_value * linalg::lambda_max(B);
}

SdpSolution solve(const SdpProblem& p, double tol, int max_iter) {
  SdpOptions o;
  o.tol = tol;
  o.max_iter = max_iter;
  return solve(p, o);
}

SdpSolution solve(const SdpProblem& p, const SdpOptions& opts) {
  p.validate();
  if (!(opts.tol > 0)) throw std::invalid_argument("solve: tol must be positive");
  const int n = p.n;
  const auto pattern = normalised_pattern(p);
  const Matrix C = p.objective_matrix();
  const Matrix Ct = -C;  // the iteration works on min <Ct, X>
  const double c_norm = Ct.norm();

  Matrix X = opts.warm_start ? *opts.warm_start : Matrix(Matrix::Identity(n, n) * (p.trace_value / n));
  if (X.rows() != n || X.cols() != n) throw std::invalid_argument("solve: warm start has wrong dimension");
  Matrix S = Matrix::Zero(n, n);
  Matrix Z = Matrix::Zero(n, n);
  Matrix Aty(n, n);
  Vector ye(pattern.size());
  double y0 = 0.0;
  double mu = opts.mu0;
  constexpr double kStep = 1.6;

  SdpSolution best;
  best.X = X;
  bool have_primal = false;

  auto refresh_bounds = [&]() {
    Matrix Xr = X;
    if (repair_primal(p, pattern, Xr)) {
      const double lb = linalg::inner(C, Xr);
      if (!have_primal || lb > best.objective_value) {
        best.objective_value = lb;
        best.X = Xr;
        have_primal = true;
      }
    }
    // Any Z >= 0 and any multipliers on the pattern give
    // <C, X> <= lambda_max(C + Z + W) * Tr X for every feasible X.
    Matrix B = C + Z;
    for (std::size_t e = 0; e < pattern.size(); ++e) {
      auto [i, j] = pattern[e];
      B(i, j) += ye[e];
      B(j, i) += ye[e];
    }
    B = (0.5 * (B + B.transpose())).eval();
    const double ub = linalg::lambda_max(B) * p.trace_value;
    if (ub < best.dual_bound) {
      best.dual_bound = ub;
      best.dual_certificate = std::move(B);
    }
  };

  auto converged = [&] { return best.gap() <= opts.tol * (1.0 + std::abs(best.objective_value)); };

  int it = 0;
  for (; it < opts.max_iter; ++it) {
    // y-update: A A^* is diagonal (n for the trace row, 2 for each pattern row).
    const Matrix R = S + Z - Ct;
    y0 = -(mu * (X.trace() - p.trace_value) + R.trace()) / n;
    Aty.setZero();
    Aty.diagonal().setConstant(y0);
    for (std::size_t e = 0; e < pattern.size(); ++e) {
      auto [i, j] = pattern[e];
      ye[e] = -(mu * X(i, j) + R(i, j));
      Aty(i, j) = Aty(j, i) = ye[e];
    }
    if (p.require_nonnegative) Z = (Ct - Aty - S - mu * X).cwiseMax(0.0);

    Matrix V = Ct - Aty - Z - mu * X;
    V = (0.5 * (V + V.transpose())).eval();
    if (!V.allFinite()) {
      best.status = SdpStatus::infeasible_numerics;
      break;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(V);
    if (es.info() != Eigen::Success) {
      best.status = SdpStatus::infeasible_numerics;
      break;
    }
    const Vector& w = es.eigenvalues();
    const Matrix& Q = es.eigenvectors();
    S = Q * w.cwiseMax(0.0).asDiagonal() * Q.transpose();
    const Matrix Xnew = Q * (-w).cwiseMax(0.0).asDiagonal() * Q.transpose() / mu;
    X = (1.0 - kStep) * X + kStep * Xnew;

    if ((it + 1) % opts.check_every == 0) {
      refresh_bounds();
      if (have_primal && (converged() || (opts.stop_when && opts.stop_when(best.objective_value, best.dual_bound)))) {
        best.status = converged() ? SdpStatus::optimal : SdpStatus::stopped;
        ++it;
        break;
      }
      // Residual balancing between the affine residual of X and the slack
      // residual of (y, S, Z).
      double pinf2 = std::pow(X.trace() - p.trace_value, 2);
      for (auto [i, j] : pattern) pinf2 += 2 * X(i, j) * X(i, j);
      const double pinf = std::sqrt(pinf2) / (1.0 + p.trace_value);
      const double dinf = (Aty + S + Z - Ct).norm() / (1.0 + c_norm);
      if (pinf > 10 * dinf) mu = std::min(mu * 2.0, 1e6);
      else if (dinf > 10 * pinf) mu = std::max(mu / 2.0, 1e-6);
    }
  }
  if (best.status == SdpStatus::max_iter) {
    refresh_bounds();
    best.status = have_primal && converged() ? SdpStatus::optimal : SdpStatus::max_iter;
  }
  best.iterations = it;
  if (!have_primal) {
    best.X = Matrix::Identity(n, n) * (p.trace_value / n);
    if (best.status != SdpStatus::infeasible_numerics) best.status = SdpStatus::max_iter;
  }
  best.primal_residuals = verify_feasible(p, best.X, opts.tol);
  return best;
}

}  // namespace sosperfect
