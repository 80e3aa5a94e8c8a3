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

// Cross-covariance / cross-correlation between whitened and original
// variables, and the objectives that single out each whitening method.
//
//   Phi = cov(z, x) = W Sigma = Q1 Sigma^{1/2}
//   Psi = cor(z, x) = Phi V^{-1/2} = Q2 rho^{1/2}
//
//   g1(Q1) = trace(Phi)            maximized by ZCA
//   g2(Q2) = trace(Psi)            maximized by ZCA-cor
//   h1(Q1) = diag(Phi Phi^T)       maximized in order by PCA
//   h2(Q2) = diag(Psi Psi^T)       maximized in order by PCA-cor
//
// Cholesky whitening is the one method whose Phi and Psi are both lower
// triangular with positive diagonal.

#ifndef SPHERING_DIAGNOSTICS_HPP_
#define SPHERING_DIAGNOSTICS_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "sphering/linalg.hpp"
#include "sphering/moments.hpp"
#include "sphering/whitening.hpp"

namespace sphering {

// Orthogonality residual above which the objectives reject a rotation.
inline constexpr double kRotationTolerance = 1e-6;

// Tolerance of the structural certificates.
inline constexpr double kCertificateTolerance = 1e-8;

struct CrossStats {
  Matrix phi;
  Matrix psi;
  double trace_phi = 0.0;   // g1
  double trace_psi = 0.0;   // g2
  Vector phi_row_sq;        // h1 = diag(Phi Phi^T)
  Vector psi_row_sq;        // h2 = diag(Psi Psi^T)
  Vector psi_col_sq;        // diag(Psi^T Psi), identically 1
  Vector diag_psi;          // cor(z_i, x_i)
  // E[(z - x)^T (z - x)] for centered variables: d - 2 trace(Phi) + trace(V).
  double squared_distance = 0.0;
};

CrossStats ComputeCrossStats(const Whitener& whitener);

// trace(q1 Sigma^{1/2}). Throws InvalidInput if q1 is not orthogonal to
// within kRotationTolerance or has the wrong size.
double ObjectiveG1(const Matrix& q1, const CovarianceModel& model);

// trace(q2 rho^{1/2}).
double ObjectiveG2(const Matrix& q2, const CovarianceModel& model);

// diag(q1 Sigma q1^T).
Vector CompressionH1(const Matrix& q1, const CovarianceModel& model);

// diag(q2 rho q2^T).
Vector CompressionH2(const Matrix& q2, const CovarianceModel& model);

struct Certificate {
  bool holds = false;
  double residual = 0.0;  // max-abs violation
  bool expected = false;  // whether the method should satisfy it
};

struct StructureCertificates {
  Certificate phi_symmetric;         // ZCA
  Certificate psi_symmetric;         // ZCA-cor
  Certificate phi_lower_triangular;  // Cholesky (positive diagonal too)
  Certificate psi_lower_triangular;  // Cholesky (positive diagonal too)

  // True when every certificate holds exactly when it is expected to.
  bool MatchesMethod() const;
};

StructureCertificates CheckStructure(const CrossStats& stats, Method method);

// Compares each objective at its optimal rotation against the best value
// seen over `rotations` Haar-random rotations (seeds seed, seed + 1, ...).
// A sampled check, not a proof: it can only find counterexamples.
struct OptimalityCheck {
  int rotations = 0;
  double g1_optimum = 0.0;  // g1(I)
  double g1_sampled_max = 0.0;
  double g2_optimum = 0.0;  // g2(I)
  double g2_sampled_max = 0.0;
  double h1_first_optimum = 0.0;  // largest eigenvalue of Sigma
  double h1_first_sampled_max = 0.0;
  double h2_first_optimum = 0.0;  // largest eigenvalue of rho
  double h2_first_sampled_max = 0.0;

  bool Passed(double tolerance = 1e-9) const;
};

OptimalityCheck SampleOptimality(const CovarianceModel& model, int rotations,
                                 std::uint64_t seed);

// The four scalar objectives compared across methods. Larger is better for
// each of them.
enum class Criterion { kTracePhi, kTracePsi, kMaxPhiRowSq, kMaxPsiRowSq };

inline constexpr std::array<Criterion, 4> kAllCriteria = {
    Criterion::kTracePhi, Criterion::kTracePsi, Criterion::kMaxPhiRowSq,
    Criterion::kMaxPsiRowSq};

std::string_view CriterionLabel(Criterion criterion);

struct ComparisonRow {
  Method method = Method::kZca;
  Vector diag_psi;  // first min(d, 4) entries
  double trace_phi = 0.0;
  double trace_psi = 0.0;
  double max_phi_row_sq = 0.0;
  double max_psi_row_sq = 0.0;

  double Value(Criterion criterion) const;
};

struct Ranking {
  std::size_t best = 0;    // index into ComparisonReport::rows
  std::size_t second = 0;
};

struct ComparisonReport {
  Index dim = 0;
  std::array<ComparisonRow, kAllMethods.size()> rows;  // kAllMethods order
  std::array<Ranking, kAllCriteria.size()> rankings;   // kAllCriteria order
};

ComparisonReport CompareAll(const CovarianceModel& model);
ComparisonReport CompareAll(const DataMatrix& x);

// Plain-text table, one column per method. Best values carry a trailing
// '*', second best a trailing '~'. `precision` is the number of decimals.
std::string FormatReport(const ComparisonReport& report, int precision = 4);

}  // namespace sphering

#endif  // SPHERING_DIAGNOSTICS_HPP_
