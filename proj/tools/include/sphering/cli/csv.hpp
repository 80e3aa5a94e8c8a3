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

#ifndef SPHERING_CLI_CSV_HPP_
#define SPHERING_CLI_CSV_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "sphering/moments.hpp"

namespace sphering::cli {

// Name under which the bundled iris measurements are addressed.
inline constexpr std::string_view kIrisBuiltin = "iris";

// Anderson/Fisher iris measurements: 150 rows, columns sepal_length,
// sepal_width, petal_length, petal_width (cm). Species labels omitted.
std::string_view BuiltinIrisCsv();

// Parses comma-separated text with one header row. Surrounding blanks and a
// trailing '\r' are ignored; blank lines are skipped.
//   - empty text, ragged rows, non-numeric cells -> IoError with location
//   - header only (no data rows)                 -> InvalidInput
DataMatrix ParseCsv(std::string_view text, std::string_view source = "<input>");

// Reads `path`, or the bundled data set when `path` is "iris".
DataMatrix ReadCsv(const std::string& path);

// Writes a header row and one line per observation. Without `precision`
// every value uses the shortest representation that parses back to the
// same double; with it, fixed notation with that many decimals.
void WriteCsv(const DataMatrix& x, std::ostream& out,
              std::optional<int> precision = std::nullopt);

}  // namespace sphering::cli

#endif  // SPHERING_CLI_CSV_HPP_
