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

#include "sphering/moments.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "sphering/errors.hpp"

namespace sphering {

namespace {

constexpr std::size_t kPairwiseBlock = 8;

}  // namespace

DataMatrix::DataMatrix(Matrix values, std::vector<std::string> column_names)
    : values_(std::move(values)), names_(std::move(column_names)) {
  if (!values_.allFinite()) throw InvalidInput("DataMatrix: non-finite value");
  if (!names_.empty() && static_cast<Index>(names_.size()) != values_.cols()) {
    std::ostringstream os;
    os << "DataMatrix: " << names_.size() << " column names for "
       << values_.cols() << " columns";
    throw InvalidInput(os.str());
  }
}

double PairwiseSum(std::span<const double> values) {
  if (values.size() <= kPairwiseBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

Vector ColumnMeans(const DataMatrix& x) {
  if (x.rows() == 0) throw InvalidInput("ColumnMeans: data has no rows");
  Vector means(x.cols());
  for (Index j = 0; j < x.cols(); ++j) {
    // Matrix is column-major, so a column is contiguous.
    const double* col = x.values().col(j).data();
    means(j) = PairwiseSum({col, static_cast<std::size_t>(x.rows())}) /
               static_cast<double>(x.rows());
  }
  return means;
}

SymMatrix EmpiricalCovariance(const DataMatrix& x) {
  const Index n = x.rows();
  const Index d = x.cols();
  if (n < 2) {
    throw InvalidInput("EmpiricalCovariance: need at least 2 observations");
  }
  if (d < 1) throw InvalidInput("EmpiricalCovariance: data has no columns");
  const Matrix centered = x.values().rowwise() - ColumnMeans(x).transpose();
  Matrix s(d, d);
  std::vector<double> products(static_cast<std::size_t>(n));
  for (Index i = 0; i < d; ++i) {
    for (Index j = i; j < d; ++j) {
      for (Index k = 0; k < n; ++k) {
        products[static_cast<std::size_t>(k)] = centered(k, i) * centered(k, j);
      }
      s(i, j) = s(j, i) = PairwiseSum(products) / static_cast<double>(n - 1);
    }
  }
  return SymMatrix(s);
}

CorrelationParts CovToCor(const SymMatrix& sigma) {
  const Index d = sigma.dim();
  Vector v = sigma.matrix().diagonal();
  for (Index i = 0; i < d; ++i) {
    if (!(v(i) > 0.0)) {
      std::ostringstream os;
      os << "CovToCor: variance of column " << i << " is not positive ("
         << v(i) << ")";
      throw InvalidInput(os.str());
    }
  }
  const Vector inv_sd = v.array().rsqrt().matrix();
  Matrix rho = inv_sd.asDiagonal() * sigma.matrix() * inv_sd.asDiagonal();
  rho.diagonal().setOnes();
  return {std::move(v), SymMatrix(rho)};
}

CovarianceModel ModelFromCovariance(const SymMatrix& sigma, Vector mean) {
  const Index d = sigma.dim();
  if (d < 1) throw InvalidInput("ModelFromCovariance: empty covariance");
  if (mean.size() == 0) mean = Vector::Zero(d);
  if (mean.size() != d) {
    throw InvalidInput("ModelFromCovariance: mean has wrong length");
  }

  CovarianceModel model;
  model.sigma = sigma;
  model.eigen_sigma = SymEigen(sigma);
  // Rejects singular input before the correlation split divides by zero.
  const SymMatrix precision = SpdPower(model.eigen_sigma, -1.0);
  auto parts = CovToCor(sigma);
  model.variances = std::move(parts.variances);
  model.rho = std::move(parts.rho);
  model.eigen_rho = SymEigen(model.rho);
  model.chol_precision = CholeskyLower(precision);
  model.mean = std::move(mean);
  return model;
}

CovarianceModel BuildModel(const DataMatrix& x) {
  return ModelFromCovariance(EmpiricalCovariance(x), ColumnMeans(x));
}

}  // namespace sphering
