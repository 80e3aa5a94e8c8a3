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

#ifndef SPHERING_MOMENTS_HPP_
#define SPHERING_MOMENTS_HPP_

#include <span>
#include <string>
#include <vector>

#include "sphering/linalg.hpp"

namespace sphering {

// n x d observations, one sample per row.
class DataMatrix {
 public:
  DataMatrix() = default;

  // Throws InvalidInput on non-finite values or when `column_names` is
  // non-empty and its size differs from the column count.
  explicit DataMatrix(Matrix values, std::vector<std::string> column_names = {});

  Index rows() const { return values_.rows(); }
  Index cols() const { return values_.cols(); }
  const Matrix& values() const { return values_; }
  const std::vector<std::string>& column_names() const { return names_; }

 private:
  Matrix values_;
  std::vector<std::string> names_;
};

// Sigma = V^{1/2} rho V^{1/2}.
struct CorrelationParts {
  Vector variances;  // diag(V)
  SymMatrix rho;
};

// Covariance together with everything the whitening constructions need.
struct CovarianceModel {
  SymMatrix sigma;
  Vector variances;  // diag(V), all > 0
  SymMatrix rho;
  EigenPair eigen_sigma;  // U, Lambda
  EigenPair eigen_rho;    // G, Theta
  LowerTriangular chol_precision;  // L L^T = Sigma^{-1}
  Vector mean;

  Index dim() const { return sigma.dim(); }
};

// Pairwise (cascade) summation; reproducible to the last bit for a fixed
// input order and much less sensitive to ordering than a running sum.
double PairwiseSum(std::span<const double> values);

// Per-column arithmetic mean. Throws InvalidInput when there are no rows.
Vector ColumnMeans(const DataMatrix& x);

// Unbiased (divisor n - 1) covariance of the columns. Throws InvalidInput
// when n < 2. Singular results are returned as-is.
SymMatrix EmpiricalCovariance(const DataMatrix& x);

// Splits a covariance into variances and correlation; diag(rho) is set to
// exactly 1. Throws InvalidInput on a non-positive variance.
CorrelationParts CovToCor(const SymMatrix& sigma);

// Model of a given covariance. Throws NotPositiveDefinite if sigma is not.
CovarianceModel ModelFromCovariance(const SymMatrix& sigma, Vector mean = {});

// Estimates the covariance of `x` and builds its model.
CovarianceModel BuildModel(const DataMatrix& x);

}  // namespace sphering

#endif  // SPHERING_MOMENTS_HPP_
