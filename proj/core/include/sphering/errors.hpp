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

#ifndef SPHERING_ERRORS_HPP_
#define SPHERING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sphering {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: wrong shapes, asymmetric input, too few samples.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A matrix that must be symmetric positive definite is not. `residual`
// carries the offending quantity (smallest eigenvalue, failed pivot, ...).
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// File access or parse failure. Row/column are 1-based, 0 when unknown.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what, std::size_t row = 0,
                   std::size_t column = 0)
      : Error(what), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace sphering

#endif  // SPHERING_ERRORS_HPP_
