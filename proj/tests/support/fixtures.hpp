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

// Seeded generators shared by the unit, property and acceptance suites.

#ifndef SPHERING_TESTS_SUPPORT_FIXTURES_HPP_
#define SPHERING_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sphering/linalg.hpp"
#include "sphering/moments.hpp"

namespace sphering::testing {

// Dimension cycling through 1..8 as the seed advances.
inline Index FixtureDim(std::uint64_t seed) {
  return static_cast<Index>(seed % 8) + 1;
}

// Random SPD covariance D Q diag(lambda) Q^T D with lambda in [0.2, 5] and
// per-variable scales D in [0.5, 3], so both the correlation structure and
// the variances are non-trivial. Condition number stays below ~1000.
inline SymMatrix RandomSpd(Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 17);
  std::uniform_real_distribution<double> eig(0.2, 5.0);
  std::uniform_real_distribution<double> scale(0.5, 3.0);
  const Matrix q = RandomOrthogonal(d, seed * 104729 + 3);
  Vector lambda(d);
  Vector s(d);
  for (Index i = 0; i < d; ++i) lambda(i) = eig(rng);
  for (Index i = 0; i < d; ++i) s(i) = scale(rng);
  const Matrix m = s.asDiagonal() * q * lambda.asDiagonal() * q.transpose() *
                   s.asDiagonal();
  return SymMatrix(0.5 * (m + m.transpose()));
}

// Random symmetric (not necessarily definite) matrix, entries in [-1, 1].
inline SymMatrix RandomSymmetric(Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i <= j; ++i) m(i, j) = m(j, i) = u(rng);
  }
  return SymMatrix(m);
}

// n draws from N(mean, sigma), sigma given through its Cholesky factor.
inline DataMatrix RandomData(Index n, const SymMatrix& sigma,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> offset(-5.0, 5.0);
  const Index d = sigma.dim();
  Matrix z(n, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < n; ++i) z(i, j) = normal(rng);
  }
  const Matrix l = Eigen::LLT<Matrix>(sigma.matrix()).matrixL();
  Matrix x = z * l.transpose();
  Vector mean(d);
  for (Index j = 0; j < d; ++j) mean(j) = offset(rng);
  x.rowwise() += mean.transpose();
  return DataMatrix(std::move(x));
}

// Reads data/iris.csv with a plain stream parser, independent of the CLI
// reader, for oracle computations.
inline std::vector<std::vector<double>> NaiveReadIris() {
  std::ifstream in(std::string(SPHERING_DATA_DIR) + "/iris.csv");
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sphering::testing

#endif  // SPHERING_TESTS_SUPPORT_FIXTURES_HPP_
