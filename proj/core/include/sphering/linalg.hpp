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

// Dense symmetric linear algebra used by the whitening constructions.
//
// Every routine here is a pure function. Eigenvalues are returned in
// descending order and eigenvectors carry a canonical sign (see FixSigns),
// so two calls on the same input always produce bit-identical output.
//
// Within an exactly degenerate eigenspace the basis is whatever the solver
// returns (after sign canonicalization); quantities derived from it, such as
// PCA whitening matrices, are then unique only up to a rotation inside that
// eigenspace.

#ifndef SPHERING_LINALG_HPP_
#define SPHERING_LINALG_HPP_

#include <cstdint>

#include <Eigen/Dense>

namespace sphering {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Largest tolerated |m(i,j) - m(j,i)| for a matrix of unit scale. Inputs
// with larger entries get a tolerance proportional to max|m(i,j)|.
inline constexpr double kSymmetryTolerance = 1e-12;

// Relative floor for "positive definite": eigenvalues at or below
// kPositiveDefiniteRelTol * max(1, largest eigenvalue) are rejected.
inline constexpr double kPositiveDefiniteRelTol = 1e-10;

// Pivot threshold used by FixSigns.
inline constexpr double kSignPivotTolerance = 1e-12;

// A square matrix that is symmetric to within kSymmetryTolerance. Small
// asymmetries are removed on construction by averaging with the transpose.
class SymMatrix {
 public:
  SymMatrix() = default;

  // Throws InvalidInput if `m` is not square, has non-finite entries or is
  // asymmetric beyond tolerance.
  explicit SymMatrix(const Matrix& m);

  static SymMatrix Identity(Index d) { return SymMatrix(Matrix::Identity(d, d)); }

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  double operator()(Index i, Index j) const { return m_(i, j); }

 private:
  Matrix m_;
};

// Spectral decomposition m = vectors * diag(values) * vectors^T.
struct EigenPair {
  Vector values;   // descending
  Matrix vectors;  // orthonormal columns, sign-canonicalized
};

// Lower-triangular matrix with strictly positive diagonal.
class LowerTriangular {
 public:
  LowerTriangular() = default;

  // Throws InvalidInput if `m` is not square, has a nonzero entry above the
  // diagonal, or a non-positive diagonal entry.
  explicit LowerTriangular(const Matrix& m);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

// Max-abs entry of `m`, 0 for an empty matrix.
double MaxAbs(const Matrix& m);

// Max-abs entry of q^T q - I. Throws InvalidInput if q is not square.
double OrthogonalityResidual(const Matrix& q);

// Eigendecomposition with descending eigenvalues and sign-fixed vectors.
EigenPair SymEigen(const SymMatrix& m);

// Flips the sign of each column so its pivot entry is positive. The pivot of
// column k is entry (k, k) when |entry(k, k)| > kSignPivotTolerance, and
// otherwise the largest-magnitude entry of the column (first row on ties).
Matrix FixSigns(Matrix vectors);

// Symmetric positive definite square root and inverse square root. Both
// throw NotPositiveDefinite when the smallest eigenvalue is at or below the
// kPositiveDefiniteRelTol floor.
SymMatrix SpdSqrt(const SymMatrix& m);
SymMatrix SpdInvSqrt(const SymMatrix& m);

// m^{-1} through the eigendecomposition.
SymMatrix SpdInverse(const SymMatrix& m);

// f(m) = U diag(values^power) U^T from an existing decomposition. Throws
// NotPositiveDefinite under the same rule as SpdSqrt.
SymMatrix SpdPower(const EigenPair& eigen, double power);

// L with L L^T = m, L lower triangular with positive diagonal.
LowerTriangular CholeskyLower(const SymMatrix& m);

// Haar-distributed d x d orthogonal matrix, deterministic in `seed`.
// Obtained from the QR factorization of a matrix of standard normal draws,
// with the columns of Q rescaled so that diag(R) > 0.
Matrix RandomOrthogonal(Index d, std::uint64_t seed);

}  // namespace sphering

#endif  // SPHERING_LINALG_HPP_
