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

#include "sphering/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sphering/errors.hpp"

namespace sphering {

namespace {

std::string Describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (" << value << ")";
  return os.str();
}

void RequireSquare(const Matrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << who << ": expected a square matrix, got " << m.rows() << "x"
       << m.cols();
    throw InvalidInput(os.str());
  }
}

// Throws unless every eigenvalue clears the positive-definite floor.
void RequirePositiveDefinite(const Vector& values, const char* who) {
  if (values.size() == 0) return;
  const double largest = values.maxCoeff();
  const double smallest = values.minCoeff();
  const double floor = kPositiveDefiniteRelTol * std::max(1.0, largest);
  if (!(smallest > floor)) {
    throw NotPositiveDefinite(
        Describe((std::string(who) +
                  ": matrix is not positive definite, smallest eigenvalue")
                     .c_str(),
                 smallest),
        smallest);
  }
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& m) {
  RequireSquare(m, "SymMatrix");
  if (!m.allFinite()) throw InvalidInput("SymMatrix: non-finite entry");
  const double asym = MaxAbs(m - m.transpose());
  const double tol = kSymmetryTolerance * std::max(1.0, MaxAbs(m));
  if (asym > tol) {
    throw InvalidInput(Describe("SymMatrix: asymmetry exceeds tolerance", asym));
  }
  m_ = 0.5 * (m + m.transpose());
}

LowerTriangular::LowerTriangular(const Matrix& m) {
  RequireSquare(m, "LowerTriangular");
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < j; ++i) {
      if (m(i, j) != 0.0) {
        throw InvalidInput("LowerTriangular: nonzero entry above diagonal");
      }
    }
    if (!(m(j, j) > 0.0)) {
      throw InvalidInput(
          Describe("LowerTriangular: non-positive diagonal", m(j, j)));
    }
  }
  m_ = m;
}

double MaxAbs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double OrthogonalityResidual(const Matrix& q) {
  RequireSquare(q, "OrthogonalityResidual");
  return MaxAbs(q.transpose() * q - Matrix::Identity(q.rows(), q.cols()));
}

Matrix FixSigns(Matrix vectors) {
  const Index rows = vectors.rows();
  for (Index k = 0; k < vectors.cols(); ++k) {
    auto col = vectors.col(k);
    Index pivot = k;
    if (std::abs(col(k)) <= kSignPivotTolerance) {
      pivot = 0;
      for (Index i = 1; i < rows; ++i) {
        if (std::abs(col(i)) > std::abs(col(pivot))) pivot = i;
      }
    }
    if (col(pivot) < 0.0) col = -col;
  }
  return vectors;
}

EigenPair SymEigen(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("SymEigen: eigensolver did not converge");
  }
  // The solver sorts ascending. Stable sort to descending so that equal
  // eigenvalues keep the solver's order.
  const Vector& values = solver.eigenvalues();
  std::vector<Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return values(a) > values(b); });
  EigenPair out;
  out.values = values(order);
  out.vectors = solver.eigenvectors()(Eigen::all, order);
  if (!out.values.allFinite()) {
    throw InvalidInput("SymEigen: non-finite eigenvalue");
  }
  out.vectors = FixSigns(std::move(out.vectors));
  return out;
}

SymMatrix SpdPower(const EigenPair& eigen, double power) {
  RequirePositiveDefinite(eigen.values, "SpdPower");
  const Vector scaled = eigen.values.array().pow(power).matrix();
  const Matrix r =
      eigen.vectors * scaled.asDiagonal() * eigen.vectors.transpose();
  // Round-off leaves r asymmetric at the 1e-16 level; average it out.
  return SymMatrix(0.5 * (r + r.transpose()));
}

SymMatrix SpdSqrt(const SymMatrix& m) { return SpdPower(SymEigen(m), 0.5); }

SymMatrix SpdInvSqrt(const SymMatrix& m) {
  return SpdPower(SymEigen(m), -0.5);
}

SymMatrix SpdInverse(const SymMatrix& m) {
  return SpdPower(SymEigen(m), -1.0);
}

LowerTriangular CholeskyLower(const SymMatrix& m) {
  // LLT alone accepts matrices that are only numerically semidefinite, so
  // check the spectrum against the same floor as the square roots.
  RequirePositiveDefinite(SymEigen(m).values, "CholeskyLower");
  Eigen::LLT<Matrix> llt(m.matrix());
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("CholeskyLower: factorization failed", 0.0);
  }
  Matrix l = llt.matrixL();
  return LowerTriangular(l);
}

Matrix RandomOrthogonal(Index d, std::uint64_t seed) {
  if (d < 1) throw InvalidInput("RandomOrthogonal: dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  // Fill column-major in a fixed order so the draw sequence is stable.
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix& packed = qr.matrixQR();
  for (Index k = 0; k < d; ++k) {
    if (packed(k, k) < 0.0) q.col(k) = -q.col(k);
  }
  return q;
}

}  // namespace sphering
