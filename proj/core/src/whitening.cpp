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

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "sphering/errors.hpp"

namespace sphering {

namespace {

Vector InvSqrt(const Vector& v) { return v.array().rsqrt().matrix(); }
Vector Sqrt(const Vector& v) { return v.array().sqrt().matrix(); }

std::string Lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kZca: return "zca";
    case Method::kPca: return "pca";
    case Method::kCholesky: return "cholesky";
    case Method::kZcaCor: return "zca-cor";
    case Method::kPcaCor: return "pca-cor";
  }
  return "unknown";
}

std::string_view MethodLabel(Method method) {
  switch (method) {
    case Method::kZca: return "ZCA";
    case Method::kPca: return "PCA";
    case Method::kCholesky: return "Cholesky";
    case Method::kZcaCor: return "ZCA-cor";
    case Method::kPcaCor: return "PCA-cor";
  }
  return "unknown";
}

std::string ValidMethodNames() {
  std::string out;
  for (Method m : kAllMethods) {
    if (!out.empty()) out += ", ";
    out += MethodName(m);
  }
  return out;
}

Method ParseMethod(std::string_view name) {
  const std::string lowered = Lowercase(name);
  for (Method m : kAllMethods) {
    if (lowered == MethodName(m)) return m;
  }
  throw InvalidInput("unknown whitening method '" + std::string(name) +
                     "'; valid methods: " + ValidMethodNames());
}

Whitener::Whitener(Method method, Matrix w,
                   std::shared_ptr<const CovarianceModel> model)
    : method_(method), w_(std::move(w)), model_(std::move(model)) {
  if (!model_) throw InvalidInput("Whitener: null covariance model");
  if (w_.rows() != model_->dim() || w_.cols() != model_->dim()) {
    throw InvalidInput("Whitener: matrix does not match model dimension");
  }
}

Whitener BuildWhitener(Method method,
                       std::shared_ptr<const CovarianceModel> model) {
  if (!model) throw InvalidInput("BuildWhitener: null covariance model");
  const CovarianceModel& m = *model;
  const Vector inv_sd = InvSqrt(m.variances);
  Matrix w;
  switch (method) {
    case Method::kZca:
      w = SpdPower(m.eigen_sigma, -0.5).matrix();
      break;
    case Method::kPca:
      w = InvSqrt(m.eigen_sigma.values).asDiagonal() *
          m.eigen_sigma.vectors.transpose();
      break;
    case Method::kCholesky:
      w = m.chol_precision.matrix().transpose();
      break;
    case Method::kZcaCor:
      w = SpdPower(m.eigen_rho, -0.5).matrix() * inv_sd.asDiagonal();
      break;
    case Method::kPcaCor:
      w = InvSqrt(m.eigen_rho.values).asDiagonal() *
          m.eigen_rho.vectors.transpose() * inv_sd.asDiagonal();
      break;
  }
  return Whitener(method, std::move(w), std::move(model));
}

Whitener BuildWhitener(Method method, const CovarianceModel& model) {
  return BuildWhitener(method, std::make_shared<const CovarianceModel>(model));
}

Matrix CholeskyCorMatrix(const CovarianceModel& model) {
  const SymMatrix rho_inv = SpdPower(model.eigen_rho, -1.0);
  const LowerTriangular l_cor = CholeskyLower(rho_inv);
  return l_cor.matrix().transpose() * InvSqrt(model.variances).asDiagonal();
}

DataMatrix Whiten(const DataMatrix& x, const Whitener& whitener, bool center) {
  if (x.cols() != whitener.dim()) {
    std::ostringstream os;
    os << "Whiten: data has " << x.cols() << " columns, whitener expects "
       << whitener.dim();
    throw InvalidInput(os.str());
  }
  Matrix z;
  if (center && x.rows() > 0) {
    const Vector means = ColumnMeans(x);
    z = (x.values().rowwise() - means.transpose()) *
        whitener.matrix().transpose();
  } else {
    z = x.values() * whitener.matrix().transpose();
  }
  std::vector<std::string> names;
  names.reserve(x.column_names().size());
  for (const auto& name : x.column_names()) names.push_back("z_" + name);
  return DataMatrix(std::move(z), std::move(names));
}

Matrix RotationQ1(const Whitener& whitener) {
  return whitener.matrix() *
         SpdPower(whitener.model().eigen_sigma, 0.5).matrix();
}

Matrix RotationQ2(const Whitener& whitener) {
  const CovarianceModel& m = whitener.model();
  return whitener.matrix() * Sqrt(m.variances).asDiagonal() *
         SpdPower(m.eigen_rho, 0.5).matrix();
}

Matrix LinkMatrix(const CovarianceModel& model) {
  return SpdPower(model.eigen_rho, -0.5).matrix() *
         InvSqrt(model.variances).asDiagonal() *
         SpdPower(model.eigen_sigma, 0.5).matrix();
}

}  // namespace sphering
