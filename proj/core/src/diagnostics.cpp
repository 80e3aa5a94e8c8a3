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

#include "sphering/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

#include "sphering/errors.hpp"

namespace sphering {

namespace {

// Values closer than this are treated as tied; ties go to the earlier method.
constexpr double kRankingTieTolerance = 1e-12;

void RequireRotation(const Matrix& q, const CovarianceModel& model,
                     const char* who) {
  if (q.rows() != model.dim() || q.cols() != model.dim()) {
    throw InvalidInput(std::string(who) + ": rotation has wrong dimension");
  }
  const double residual = OrthogonalityResidual(q);
  if (!(residual <= kRotationTolerance)) {
    std::ostringstream os;
    os << who << ": matrix is not orthogonal (residual " << residual << ")";
    throw InvalidInput(os.str());
  }
}

double SymmetryResidual(const Matrix& m) { return MaxAbs(m - m.transpose()); }

// Residual is the largest entry above the diagonal; holding also needs a
// strictly positive diagonal.
Certificate LowerTriangularCertificate(const Matrix& m) {
  double upper = 0.0;
  bool positive_diagonal = true;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < j; ++i) upper = std::max(upper, std::abs(m(i, j)));
    if (!(m(j, j) > 0.0)) positive_diagonal = false;
  }
  Certificate c;
  c.residual = upper;
  c.holds = upper <= kCertificateTolerance && positive_diagonal;
  return c;
}

std::string FormatFixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s(buf);
  // Collapse "-0.000" to "0.000" so output does not depend on the sign of
  // tiny round-off.
  if (s.front() == '-' &&
      s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

Ranking Rank(const ComparisonReport& report, Criterion criterion) {
  const auto& rows = report.rows;
  Ranking r;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].Value(criterion) >
        rows[r.best].Value(criterion) + kRankingTieTolerance) {
      r.best = i;
    }
  }
  r.second = r.best == 0 ? 1 : 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == r.best || i == r.second) continue;
    if (rows[i].Value(criterion) >
        rows[r.second].Value(criterion) + kRankingTieTolerance) {
      r.second = i;
    }
  }
  return r;
}

}  // namespace

CrossStats ComputeCrossStats(const Whitener& whitener) {
  const CovarianceModel& model = whitener.model();
  CrossStats s;
  s.phi = whitener.matrix() * model.sigma.matrix();
  s.psi = s.phi * model.variances.array().rsqrt().matrix().asDiagonal();
  s.trace_phi = s.phi.trace();
  s.trace_psi = s.psi.trace();
  s.phi_row_sq = s.phi.rowwise().squaredNorm();
  s.psi_row_sq = s.psi.rowwise().squaredNorm();
  s.psi_col_sq = s.psi.colwise().squaredNorm().transpose();
  s.diag_psi = s.psi.diagonal();
  s.squared_distance = static_cast<double>(model.dim()) - 2.0 * s.trace_phi +
                       model.variances.sum();
  return s;
}

double ObjectiveG1(const Matrix& q1, const CovarianceModel& model) {
  RequireRotation(q1, model, "ObjectiveG1");
  return (q1 * SpdPower(model.eigen_sigma, 0.5).matrix()).trace();
}

double ObjectiveG2(const Matrix& q2, const CovarianceModel& model) {
  RequireRotation(q2, model, "ObjectiveG2");
  return (q2 * SpdPower(model.eigen_rho, 0.5).matrix()).trace();
}

Vector CompressionH1(const Matrix& q1, const CovarianceModel& model) {
  RequireRotation(q1, model, "CompressionH1");
  return (q1 * model.sigma.matrix() * q1.transpose()).diagonal();
}

Vector CompressionH2(const Matrix& q2, const CovarianceModel& model) {
  RequireRotation(q2, model, "CompressionH2");
  return (q2 * model.rho.matrix() * q2.transpose()).diagonal();
}

bool StructureCertificates::MatchesMethod() const {
  for (const Certificate* c : {&phi_symmetric, &psi_symmetric,
                               &phi_lower_triangular, &psi_lower_triangular}) {
    if (c->holds != c->expected) return false;
  }
  return true;
}

StructureCertificates CheckStructure(const CrossStats& stats, Method method) {
  StructureCertificates out;
  out.phi_symmetric.residual = SymmetryResidual(stats.phi);
  out.phi_symmetric.holds = out.phi_symmetric.residual <= kCertificateTolerance;
  out.phi_symmetric.expected = method == Method::kZca;

  out.psi_symmetric.residual = SymmetryResidual(stats.psi);
  out.psi_symmetric.holds = out.psi_symmetric.residual <= kCertificateTolerance;
  out.psi_symmetric.expected = method == Method::kZcaCor;

  out.phi_lower_triangular = LowerTriangularCertificate(stats.phi);
  out.phi_lower_triangular.expected = method == Method::kCholesky;
  out.psi_lower_triangular = LowerTriangularCertificate(stats.psi);
  out.psi_lower_triangular.expected = method == Method::kCholesky;
  return out;
}

bool OptimalityCheck::Passed(double tolerance) const {
  return g1_sampled_max <= g1_optimum + tolerance &&
         g2_sampled_max <= g2_optimum + tolerance &&
         h1_first_sampled_max <= h1_first_optimum + tolerance &&
         h2_first_sampled_max <= h2_first_optimum + tolerance;
}

OptimalityCheck SampleOptimality(const CovarianceModel& model, int rotations,
                                 std::uint64_t seed) {
  if (rotations < 1) {
    throw InvalidInput("SampleOptimality: need at least one rotation");
  }
  const Index d = model.dim();
  const Matrix identity = Matrix::Identity(d, d);
  OptimalityCheck out;
  out.rotations = rotations;
  out.g1_optimum = ObjectiveG1(identity, model);
  out.g2_optimum = ObjectiveG2(identity, model);
  out.h1_first_optimum = model.eigen_sigma.values(0);
  out.h2_first_optimum = model.eigen_rho.values(0);

  const double lowest = -std::numeric_limits<double>::infinity();
  out.g1_sampled_max = out.g2_sampled_max = lowest;
  out.h1_first_sampled_max = out.h2_first_sampled_max = lowest;
  for (int i = 0; i < rotations; ++i) {
    const Matrix q = RandomOrthogonal(d, seed + static_cast<std::uint64_t>(i));
    out.g1_sampled_max = std::max(out.g1_sampled_max, ObjectiveG1(q, model));
    out.g2_sampled_max = std::max(out.g2_sampled_max, ObjectiveG2(q, model));
    out.h1_first_sampled_max =
        std::max(out.h1_first_sampled_max, CompressionH1(q, model)(0));
    out.h2_first_sampled_max =
        std::max(out.h2_first_sampled_max, CompressionH2(q, model)(0));
  }
  return out;
}

std::string_view CriterionLabel(Criterion criterion) {
  switch (criterion) {
    case Criterion::kTracePhi: return "trace(Phi)";
    case Criterion::kTracePsi: return "trace(Psi)";
    case Criterion::kMaxPhiRowSq: return "max diag(Phi Phi^T)";
    case Criterion::kMaxPsiRowSq: return "max diag(Psi Psi^T)";
  }
  return "unknown";
}

double ComparisonRow::Value(Criterion criterion) const {
  switch (criterion) {
    case Criterion::kTracePhi: return trace_phi;
    case Criterion::kTracePsi: return trace_psi;
    case Criterion::kMaxPhiRowSq: return max_phi_row_sq;
    case Criterion::kMaxPsiRowSq: return max_psi_row_sq;
  }
  return 0.0;
}

ComparisonReport CompareAll(const CovarianceModel& model) {
  auto shared = std::make_shared<const CovarianceModel>(model);
  ComparisonReport report;
  report.dim = model.dim();
  const Index shown = std::min<Index>(model.dim(), 4);
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    const CrossStats s = ComputeCrossStats(BuildWhitener(kAllMethods[i], shared));
    ComparisonRow& row = report.rows[i];
    row.method = kAllMethods[i];
    row.diag_psi = s.diag_psi.head(shown);
    row.trace_phi = s.trace_phi;
    row.trace_psi = s.trace_psi;
    row.max_phi_row_sq = s.phi_row_sq.maxCoeff();
    row.max_psi_row_sq = s.psi_row_sq.maxCoeff();
  }
  for (std::size_t c = 0; c < kAllCriteria.size(); ++c) {
    report.rankings[c] = Rank(report, kAllCriteria[c]);
  }
  return report;
}

ComparisonReport CompareAll(const DataMatrix& x) {
  return CompareAll(BuildModel(x));
}

std::string FormatReport(const ComparisonReport& report, int precision) {
  constexpr int kLabelWidth = 22;
  const int value_width = std::max(precision + 4, 9);

  std::vector<std::string> lines;
  auto begin_line = [&](const std::string& label) {
    std::ostringstream os;
    os << std::left << std::setw(kLabelWidth) << label;
    lines.push_back(os.str());
  };
  auto cell = [&](const std::string& text, char marker) {
    std::ostringstream os;
    os << std::right << std::setw(value_width) << text << marker;
    lines.back() += os.str();
  };

  begin_line("");
  for (const auto& row : report.rows) {
    cell(std::string(MethodLabel(row.method)), ' ');
  }
  const Index shown = report.rows.front().diag_psi.size();
  for (Index i = 0; i < shown; ++i) {
    const std::string k = std::to_string(i + 1);
    begin_line("cor(z" + k + ",x" + k + ")");
    for (const auto& row : report.rows) {
      cell(FormatFixed(row.diag_psi(i), precision), ' ');
    }
  }
  for (std::size_t c = 0; c < kAllCriteria.size(); ++c) {
    const Criterion criterion = kAllCriteria[c];
    const Ranking& rank = report.rankings[c];
    begin_line(std::string(CriterionLabel(criterion)));
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const char marker = i == rank.best ? '*' : i == rank.second ? '~' : ' ';
      cell(FormatFixed(report.rows[i].Value(criterion), precision), marker);
    }
  }
  lines.push_back("(* best, ~ second best; larger is better)");

  std::string out;
  for (auto& line : lines) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace sphering
