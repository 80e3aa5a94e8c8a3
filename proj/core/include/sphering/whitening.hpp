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

// The five natural whitening transforms.
//
// A whitening matrix W maps x with covariance Sigma to z = W x with
// cov(z) = I, which holds exactly when W^T W = Sigma^{-1}. Any two such
// matrices differ by a rotation:
//
//   W = Q1 Sigma^{-1/2}              (polar form)
//   W = Q2 rho^{-1/2} V^{-1/2}       (correlation form)
//
// with Q1 = Q2 A and A = rho^{-1/2} V^{-1/2} Sigma^{1/2} orthogonal. The
// methods below fix the rotation:
//
//   ZCA       Sigma^{-1/2}                       Q1 = I
//   PCA       Lambda^{-1/2} U^T                  Q1 = U^T
//   CHOLESKY  L^T, with L L^T = Sigma^{-1}
//   ZCA_COR   rho^{-1/2} V^{-1/2}                Q2 = I
//   PCA_COR   Theta^{-1/2} G^T V^{-1/2}          Q2 = G^T
//
// U and G are the sign-canonicalized eigenvectors of Sigma and rho, so
// diag(U) > 0 and diag(G) > 0 whenever the diagonal entries are nonzero.

#ifndef SPHERING_WHITENING_HPP_
#define SPHERING_WHITENING_HPP_

#include <array>
#include <memory>
#include <string>
#include <string_view>

#include "sphering/linalg.hpp"
#include "sphering/moments.hpp"

namespace sphering {

enum class Method { kZca, kPca, kCholesky, kZcaCor, kPcaCor };

inline constexpr std::array<Method, 5> kAllMethods = {
    Method::kZca, Method::kPca, Method::kCholesky, Method::kZcaCor,
    Method::kPcaCor};

// Command-line name: "zca", "pca", "cholesky", "zca-cor", "pca-cor".
std::string_view MethodName(Method method);

// Display label: "ZCA", "PCA", "Cholesky", "ZCA-cor", "PCA-cor".
std::string_view MethodLabel(Method method);

// Case-insensitive inverse of MethodName. Throws InvalidInput listing the
// valid names when `name` matches none of them.
Method ParseMethod(std::string_view name);

// "zca, pca, cholesky, zca-cor, pca-cor"
std::string ValidMethodNames();

// Immutable pairing of a method, its whitening matrix and the covariance
// model it was built from.
class Whitener {
 public:
  Whitener(Method method, Matrix w,
           std::shared_ptr<const CovarianceModel> model);

  Method method() const { return method_; }
  const Matrix& matrix() const { return w_; }
  const CovarianceModel& model() const { return *model_; }
  std::shared_ptr<const CovarianceModel> shared_model() const { return model_; }
  Index dim() const { return w_.rows(); }

 private:
  Method method_;
  Matrix w_;
  std::shared_ptr<const CovarianceModel> model_;
};

Whitener BuildWhitener(Method method,
                       std::shared_ptr<const CovarianceModel> model);
Whitener BuildWhitener(Method method, const CovarianceModel& model);

// Applies Cholesky whitening to standardized variables: the Cholesky
// factor of rho^{-1}, transposed, composed with V^{-1/2}. Algebraically
// identical to the CHOLESKY whitening matrix; kept as a separate route so
// the identity can be checked.
Matrix CholeskyCorMatrix(const CovarianceModel& model);

// Z = (X - 1 xbar^T) W^T, centering on the data's own column means when
// `center` is set. Output columns are named "z_<name>" when `x` has names.
// Throws InvalidInput on a dimension mismatch.
DataMatrix Whiten(const DataMatrix& x, const Whitener& whitener,
                  bool center = true);

// Q1 = W Sigma^{1/2}.
Matrix RotationQ1(const Whitener& whitener);

// Q2 = W V^{1/2} rho^{1/2}.
Matrix RotationQ2(const Whitener& whitener);

// A = rho^{-1/2} V^{-1/2} Sigma^{1/2}, orthogonal, with Q1 = Q2 A.
Matrix LinkMatrix(const CovarianceModel& model);

}  // namespace sphering

#endif  // SPHERING_WHITENING_HPP_
