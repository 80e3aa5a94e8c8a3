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

#ifndef SPHERING_CLI_CLI_HPP_
#define SPHERING_CLI_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "sphering/whitening.hpp"

namespace sphering::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitNotPositiveDefinite = 2,
  kExitIo = 3,
};

struct CliConfig {
  std::string command;  // whiten | diagnose | compare
  std::string input;    // path, or "iris"
  Method method = Method::kZca;
  bool center = true;
  std::optional<std::string> output;
  std::uint64_t seed = 42;
  int precision = 4;
  bool check_optimality = false;
  int rotations = 200;
};

// Executes an already-parsed configuration, writing to `out` unless an
// output path is configured. Library exceptions propagate.
void Execute(const CliConfig& config, std::ostream& out);

// Parses `args` (without the program name), runs the command and maps
// failures to exit codes: 1 invalid input or flags, 2 covariance not
// positive definite, 3 I/O or parse failure.
int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace sphering::cli

#endif  // SPHERING_CLI_CLI_HPP_
