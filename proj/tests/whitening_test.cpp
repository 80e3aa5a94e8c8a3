// Copyright 2026 The Sphering Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphering/whitening.hpp"

#include <random>

#include "gtest/gtest.h"
#include "sphering/cli/csv.hpp"
#include "sphering/errors.hpp"
#include "support/fixtures.hpp"

namespace sphering {
namespace {

using testing::FixtureDim;
using testing::RandomData;
using testing::RandomSpd;

Matrix Identity(Index d) { return Matrix::Identity(d, d); }

std::shared_ptr<const CovarianceModel> Model(const SymMatrix& sigma) {
  return std::make_shared<const CovarianceModel>(ModelFromCovariance(sigma));
}

std::shared_ptr<const CovarianceModel> IrisModel() {
  static const auto model =
      std::make_shared<const CovarianceModel>(BuildModel(cli::ReadCsv("iris")));
  return model;
}

TEST(Method, NamesRoundTrip) {
  for (Method m : kAllMethods) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
    EXPECT_EQ(ParseMethod(MethodLabel(m)), m);  // case-insensitive
  }
  EXPECT_EQ(ParseMethod("ZCA-COR"), Method::kZcaCor);
}

TEST(Method, UnknownNameListsValidOnes) {
  try {
    ParseMethod("mahalanobis");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find(ValidMethodNames()), std::string::npos);
  }
}

TEST(BuildWhitener, IdentityCovarianceGivesIdentity) {
  const auto model = Model(SymMatrix::Identity(3));
  for (Method m : kAllMethods) {
    EXPECT_LT(MaxAbs(BuildWhitener(m, model).matrix() - Identity(3)), 1e-14)
        << MethodName(m);
  }
}

TEST(BuildWhitener, DiagonalCovarianceIsPureScaling) {
  Matrix sigma = Matrix::Zero(2, 2);
  sigma.diagonal() << 4, 9;
  const auto model = Model(SymMatrix(sigma));
  Matrix expected = Matrix::Zero(2, 2);
  expected.diagonal() << 0.5, 1.0 / 3.0;
  // PCA orders components by decreasing variance, so its rows swap. PCA-cor
  // sees R = I, a full tie, and keeps the identity order.
  Matrix pca = Matrix::Zero(2, 2);
  pca << 0, 1.0 / 3.0, 0.5, 0;
  for (Method m : kAllMethods) {
    const bool permuted = m == Method::kPca;
    EXPECT_LT(MaxAbs(BuildWhitener(m, model).matrix() - (permuted ? pca : expected)),
              1e-14)
        << MethodName(m);
  }
}

TEST(BuildWhitener, TwoByTwoWhitenessByDirectProduct) {
  Matrix sigma(2, 2);
  sigma << 1, 0.5, 0.5, 1;
  const auto model = Model(SymMatrix(sigma));
  for (Method m : kAllMethods) {
    const Matrix w = BuildWhitener(m, model).matrix();
    // Explicit 2x2 product, no Eigen expression templates.
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double acc = 0.0;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) acc += w(i, a) * sigma(a, b) * w(j, b);
        }
        EXPECT_NEAR(acc, i == j ? 1.0 : 0.0, 1e-12) << MethodName(m);
      }
    }
  }
}

TEST(BuildWhitener, MatchesClosedForms) {
  const auto model = IrisModel();
  const CovarianceModel& m = *model;
  const Matrix sigma_inv_sqrt = SpdInvSqrt(m.sigma).matrix();
  EXPECT_LT(MaxAbs(BuildWhitener(Method::kZca, model).matrix() - sigma_inv_sqrt),
            1e-12);
  const Matrix pca = m.eigen_sigma.values.array().rsqrt().matrix().asDiagonal() *
                     m.eigen_sigma.vectors.transpose();
  EXPECT_LT(MaxAbs(BuildWhitener(Method::kPca, model).matrix() - pca), 1e-12);
  EXPECT_GT(m.eigen_sigma.vectors.diagonal().minCoeff(), 0.0);
  EXPECT_GT(m.eigen_rho.vectors.diagonal().minCoeff(), 0.0);
}

TEST(BuildWhitener, IrisCholeskyIsTransposedPrecisionFactor) {
  const auto model = IrisModel();
  const Matrix w = BuildWhitener(Method::kCholesky, model).matrix();
  EXPECT_TRUE(w.isUpperTriangular(0.0));
  EXPECT_LT(MaxAbs(w.transpose() * w - model->sigma.matrix().inverse()), 1e-8);
}

TEST(Whitener, RejectsMismatchedMatrix) {
  EXPECT_THROW(Whitener(Method::kZca, Identity(3), Model(SymMatrix::Identity(2))),
               InvalidInput);
  EXPECT_THROW(BuildWhitener(Method::kZca, nullptr), InvalidInput);
}

TEST(Whiten, IdentityWhitenerCentersOnly) {
  const DataMatrix x(Matrix::Random(10, 3), {"a", "b", "c"});
  const Whitener w(Method::kZca, Identity(3), Model(SymMatrix::Identity(3)));
  const DataMatrix z = Whiten(x, w);
  const Vector means = ColumnMeans(x);
  EXPECT_LT(MaxAbs(z.values() - (x.values().rowwise() - means.transpose())),
            1e-15);
  EXPECT_EQ(z.column_names(), (std::vector<std::string>{"z_a", "z_b", "z_c"}));
  const DataMatrix raw = Whiten(x, w, /*center=*/false);
  EXPECT_EQ(raw.values(), x.values());
}

TEST(Whiten, IrisIsWhiteForEveryMethod) {
  const DataMatrix x = cli::ReadCsv("iris");
  for (Method m : kAllMethods) {
    const DataMatrix z = Whiten(x, BuildWhitener(m, IrisModel()));
    EXPECT_LT(MaxAbs(EmpiricalCovariance(z).matrix() - Identity(4)), 1e-8)
        << MethodName(m);
    EXPECT_LT(ColumnMeans(z).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Whiten, DimensionMismatch) {
  const Whitener w = BuildWhitener(Method::kPca, IrisModel());
  EXPECT_THROW(Whiten(DataMatrix(Matrix::Ones(3, 2)), w), InvalidInput);
}

TEST(Whiten, SingularToyDataRejectedUpstream) {
  Matrix x(2, 2);
  x << 0, 0, 2, 2;
  EXPECT_THROW(BuildModel(DataMatrix(x)), NotPositiveDefinite);
}

TEST(Rotations, TableOneIdentities) {
  const auto model = IrisModel();
  const CovarianceModel& m = *model;
  const Matrix a = LinkMatrix(m);
  const Matrix& u = m.eigen_sigma.vectors;
  const Matrix& g = m.eigen_rho.vectors;

  EXPECT_LT(MaxAbs(RotationQ1(BuildWhitener(Method::kZca, model)) - Identity(4)),
            1e-8);
  EXPECT_LT(MaxAbs(RotationQ1(BuildWhitener(Method::kPca, model)) - u.transpose()),
            1e-8);
  EXPECT_LT(MaxAbs(RotationQ2(BuildWhitener(Method::kZcaCor, model)) - Identity(4)),
            1e-8);
  EXPECT_LT(MaxAbs(RotationQ2(BuildWhitener(Method::kPcaCor, model)) - g.transpose()),
            1e-8);
  // Remaining rotation identities: ZCA Q2 = A^T, PCA Q2 = U^T A^T, ZCA-cor Q1 = A,
  // PCA-cor Q1 = G^T A.
  EXPECT_LT(MaxAbs(RotationQ2(BuildWhitener(Method::kZca, model)) - a.transpose()),
            1e-8);
  EXPECT_LT(MaxAbs(RotationQ2(BuildWhitener(Method::kPca, model)) -
                   u.transpose() * a.transpose()),
            1e-8);
  EXPECT_LT(MaxAbs(RotationQ1(BuildWhitener(Method::kZcaCor, model)) - a), 1e-8);
  EXPECT_LT(MaxAbs(RotationQ1(BuildWhitener(Method::kPcaCor, model)) -
                   g.transpose() * a),
            1e-8);
}

TEST(Rotations, OrthogonalAndLinkedOnIris) {
  const auto model = IrisModel();
  const Matrix a = LinkMatrix(*model);
  EXPECT_LT(OrthogonalityResidual(a), 1e-8);
  for (Method m : kAllMethods) {
    const Whitener w = BuildWhitener(m, model);
    const Matrix q1 = RotationQ1(w);
    const Matrix q2 = RotationQ2(w);
    EXPECT_LT(OrthogonalityResidual(q1), 1e-8) << MethodName(m);
    EXPECT_LT(OrthogonalityResidual(q2), 1e-8) << MethodName(m);
    EXPECT_LT(MaxAbs(q1 - q2 * a), 1e-8) << MethodName(m);
  }
}

TEST(Rotations, DiagonalCovarianceHasIdentityLink) {
  Matrix sigma = Matrix::Zero(3, 3);
  sigma.diagonal() << 2, 0.5, 7;
  EXPECT_LT(MaxAbs(LinkMatrix(*Model(SymMatrix(sigma))) - Identity(3)), 1e-10);
}

// Property suite over random SPD covariances, d = 1..8.

TEST(WhiteningProperties, WhitenessAndConstraint) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index d = FixtureDim(seed);
    const auto model = Model(RandomSpd(d, seed));
    const Matrix& sigma = model->sigma.matrix();
    const Matrix precision = sigma.inverse();
    for (Method m : kAllMethods) {
      const Matrix w = BuildWhitener(m, model).matrix();
      EXPECT_LT(MaxAbs(w * sigma * w.transpose() - Identity(d)), 1e-8)
          << "seed " << seed << " " << MethodName(m);
      EXPECT_LT(MaxAbs(w.transpose() * w - precision), 1e-7)
          << "seed " << seed << " " << MethodName(m);
    }
  }
}

TEST(WhiteningProperties, ZcaIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto model = Model(RandomSpd(FixtureDim(seed), seed));
    const Matrix w = BuildWhitener(Method::kZca, model).matrix();
    EXPECT_LT(MaxAbs(w - w.transpose()), 1e-10);
  }
}

TEST(WhiteningProperties, CholeskyOnStandardizedVariablesCollapses) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto model = Model(RandomSpd(FixtureDim(seed), seed));
    const Matrix chol = BuildWhitener(Method::kCholesky, model).matrix();
    EXPECT_LT(MaxAbs(CholeskyCorMatrix(*model) - chol), 1e-9) << "seed " << seed;
  }
}

TEST(WhiteningProperties, SameSingularValues) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto model = Model(RandomSpd(FixtureDim(seed), seed));
    // Descending lambda gives ascending lambda^{-1/2}; JacobiSVD sorts
    // descending, so reverse.
    const Vector expected =
        model->eigen_sigma.values.array().rsqrt().matrix().reverse();
    for (Method m : kAllMethods) {
      const Vector sv =
          Eigen::JacobiSVD<Matrix>(BuildWhitener(m, model).matrix()).singularValues();
      EXPECT_LT((sv - expected).cwiseAbs().maxCoeff(), 1e-8)
          << "seed " << seed << " " << MethodName(m);
    }
  }
}

TEST(WhiteningProperties, CorrelationMethodsAreScaleInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index d = std::max<Index>(2, FixtureDim(seed));
    const DataMatrix x = RandomData(60, RandomSpd(d, seed), seed + 1000);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    Vector s(d);
    for (Index i = 0; i < d; ++i) s(i) = scale(rng);
    const DataMatrix scaled(x.values() * s.asDiagonal());

    const auto base = std::make_shared<const CovarianceModel>(BuildModel(x));
    const auto rescaled =
        std::make_shared<const CovarianceModel>(BuildModel(scaled));
    for (Method m : {Method::kZcaCor, Method::kPcaCor}) {
      const Matrix z0 = Whiten(x, BuildWhitener(m, base)).values();
      const Matrix z1 = Whiten(scaled, BuildWhitener(m, rescaled)).values();
      EXPECT_LT(MaxAbs(z0 - z1), 1e-8) << "seed " << seed << " " << MethodName(m);
    }
  }
}

}  // namespace
}  // namespace sphering
