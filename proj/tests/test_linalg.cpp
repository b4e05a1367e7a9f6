#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "sosperfect/errors.hpp"
#include "sosperfect/generators.hpp"
#include "sosperfect/linalg.hpp"

using namespace sosperfect;
using linalg::Matrix;
using linalg::Vector;

namespace {

Matrix random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

void expect_accurate(const Matrix& m, const linalg::EigenDecomposition& ed) {
  const int n = static_cast<int>(m.rows());
  const Matrix& V = ed.vectors;
  const double res = linalg::inf_norm(m * V - V * ed.values.asDiagonal());
  EXPECT_LE(res, 1e-9 * (1 + linalg::inf_norm(m)));
  EXPECT_LE((V.transpose() * V - Matrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
  for (int k = 1; k < n; ++k) EXPECT_LE(ed.values[k - 1], ed.values[k]);
}

}  // namespace

TEST(SymmetricMatrix, Construction) {
  Matrix m(2, 2);
  m << 1, 2, 2 + 1e-14, 3;
  linalg::SymmetricMatrix s(m);
  EXPECT_EQ(s(0, 1), s(1, 0));
  m(1, 0) = 2.1;
  EXPECT_THROW(linalg::SymmetricMatrix{m}, std::invalid_argument);
  EXPECT_THROW(linalg::SymmetricMatrix{Matrix(2, 3)}, std::invalid_argument);
}

TEST(Eigen, AccuracyContract) {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 5, 17, 64, 128}) {
    Matrix m = random_symmetric(n, rng);
    expect_accurate(m, linalg::eigen_symmetric(m));
  }
  for (int n : {1, 3, 12, 40}) {
    Matrix m = random_symmetric(n, rng);
    expect_accurate(m, linalg::jacobi_eigen_symmetric(m));
  }
}

TEST(Eigen, JacobiAgreesWithQl) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_symmetric(2 + trial, rng);
    auto a = linalg::eigen_symmetric(m);
    auto b = linalg::jacobi_eigen_symmetric(m);
    EXPECT_LE((a.values - b.values).cwiseAbs().maxCoeff(), 1e-10 * (1 + linalg::inf_norm(m)));
  }
}

TEST(Eigen, GraphSpectra) {
  EXPECT_NEAR(linalg::lambda_max(cycle(5).adjacency()), 2.0, 1e-12);
  EXPECT_NEAR(linalg::lambda_max(path(3).adjacency()), std::sqrt(2.0), 1e-12);
  auto ed = linalg::eigen_symmetric(paley(13).adjacency());
  const double r = std::sqrt(13.0);
  for (int k = 0; k < 13; ++k) {
    const double v = ed.values[k];
    const double d = std::min({std::abs(v - 6.0), std::abs(v - (r - 1) / 2), std::abs(v - (-r - 1) / 2)});
    EXPECT_LT(d, 1e-10);
  }
  EXPECT_NEAR(ed.values[12], 6.0, 1e-10);
  EXPECT_NEAR(ed.values[0], (-r - 1) / 2, 1e-10);
}

TEST(Eigen, NonFinite) {
  Matrix m = Matrix::Identity(3, 3);
  m(1, 1) = std::nan("");
  EXPECT_THROW(linalg::eigen_symmetric(m), NumericError);
  EXPECT_THROW(linalg::jacobi_eigen_symmetric(m), NumericError);
  std::mt19937_64 rng(1);
  EXPECT_THROW(linalg::jacobi_eigen_symmetric(random_symmetric(10, rng), 1), NumericError);
}

TEST(Psd, Examples) {
  EXPECT_TRUE(linalg::is_psd(Matrix::Ones(4, 4)));
  EXPECT_THROW(linalg::is_psd(Matrix::Ones(2, 2), -1.0), std::invalid_argument);
  // k (I + Abar) - J on the one-edge three-vertex graph is never psd.
  Graph p3bar = complement(path(3));
  Matrix abar = complement(p3bar).adjacency();
  for (double k : {-5.0, 0.0, 0.5, 1.0, 2.0, 10.0, 1e6}) {
    Matrix m = k * (Matrix::Identity(3, 3) + abar) - Matrix::Ones(3, 3);
    EXPECT_FALSE(linalg::is_psd(m, 1e-12)) << k;
  }
  const int parts[] = {2, 2, 2};
  Graph k222 = complete_multipartite(parts);
  Matrix m = 3 * (Matrix::Identity(6, 6) + complement(k222).adjacency()) - Matrix::Ones(6, 6);
  EXPECT_TRUE(linalg::is_psd(m));
}

TEST(Psd, MatchesEigenvalueOnRandom) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    Matrix b = random_symmetric(5, rng);
    Matrix m = b * b.transpose() - 0.5 * Matrix::Identity(5, 5);
    const double lmin = linalg::lambda_min(m);
    if (std::abs(lmin) < 1e-6) continue;
    EXPECT_EQ(linalg::is_psd(m), lmin > 0);
  }
}

TEST(Dd, Examples) {
  Matrix d = Vector::LinSpaced(4, 1, 4).asDiagonal();
  EXPECT_TRUE(linalg::is_dd(d));
  EXPECT_TRUE(linalg::is_sdd(d));
  for (const Graph& g : {cycle(5), path(3), paley(13), cycle_power(10, 2)}) {
    const int n = g.order();
    const double lmax = linalg::lambda_max(g.adjacency());
    Matrix m = lmax * Matrix::Identity(n, n) - g.adjacency();
    EXPECT_TRUE(linalg::is_sdd(m));
  }
  Matrix below = (std::sqrt(2.0) - 0.01) * Matrix::Identity(3, 3) - path(3).adjacency();
  EXPECT_FALSE(linalg::is_psd(below));
  EXPECT_FALSE(linalg::is_sdd(below));
  // Path P3 at lambda_max is sdd but not dd (middle row 1.414 < 2).
  Matrix p3 = std::sqrt(2.0) * Matrix::Identity(3, 3) - path(3).adjacency();
  EXPECT_FALSE(linalg::is_dd(p3));
}

TEST(Dd, ScalingMakesDd) {
  Graph g = disjoint_union(cycle(5), path(4));
  const int n = g.order();
  Matrix m = linalg::lambda_max(g.adjacency()) * Matrix::Identity(n, n) - g.adjacency();
  auto d = linalg::sdd_scaling(m);
  ASSERT_TRUE(d.has_value());
  EXPECT_GT(d->minCoeff(), 0.0);
  EXPECT_TRUE(linalg::is_dd(d->asDiagonal() * m * d->asDiagonal(), 1e-9));
}

TEST(Dd, SddIsExactForPsdComparisonMatrices) {
  // A symmetric matrix with nonpositive off-diagonal is sdd iff psd.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 200; ++t) {
    Matrix m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < i; ++j) m(i, j) = m(j, i) = -u(rng);
    for (int i = 0; i < 5; ++i) m(i, i) = 0.5 + 3 * u(rng);
    const double lmin = linalg::lambda_min(m);
    if (std::abs(lmin) < 1e-6) continue;
    EXPECT_EQ(linalg::is_sdd(m), lmin > 0);
  }
}

TEST(Dd, ImplicationChain) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-1, 1);
  int violations = 0, dd = 0, sdd = 0;
  for (int t = 0; t < 1000; ++t) {
    Matrix m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < i; ++j) m(i, j) = m(j, i) = u(rng) * (u(rng) > 0 ? 1.0 : 0.2);
    for (int i = 0; i < 6; ++i) m(i, i) = 4.5 * (u(rng) + 1) * 0.5 + 0.2;
    const bool a = linalg::is_dd(m), b = linalg::is_sdd(m), c = linalg::is_psd(m);
    if ((a && !b) || (b && !c)) ++violations;
    dd += a;
    sdd += b;
  }
  EXPECT_EQ(violations, 0);
  // The sample must exercise both implications.
  EXPECT_GT(dd, 0);
  EXPECT_GT(sdd, dd);
}

TEST(ProjectPsd, Projection) {
  std::mt19937_64 rng(2);
  Matrix m = random_symmetric(8, rng);
  Matrix p = linalg::project_psd(m);
  EXPECT_GE(linalg::lambda_min(p), -1e-12);
  Matrix r = m - p;
  EXPECT_LE(linalg::lambda_max(r), 1e-12);
  EXPECT_NEAR(linalg::inner(p, r), 0.0, 1e-10);
}
