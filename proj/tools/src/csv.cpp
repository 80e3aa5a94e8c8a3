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

#include "sphering/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "sphering/errors.hpp"

namespace sphering::cli {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void Fail(std::string_view source, std::size_t row,
                       std::size_t column, const std::string& what) {
  std::ostringstream os;
  os << source << ": line " << row;
  if (column > 0) os << ", column " << column;
  os << ": " << what;
  throw IoError(os.str(), row, column);
}

void AppendValue(std::string& out, double v, std::optional<int> precision) {
  char buf[64];
  const auto result =
      precision ? std::to_chars(buf, buf + sizeof buf, v,
                                std::chars_format::fixed, *precision)
                : std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, result.ptr);
}

}  // namespace

DataMatrix ParseCsv(std::string_view text, std::string_view source) {
  std::vector<std::string> names;
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  bool have_header = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (Trim(line).empty()) continue;

    const auto fields = SplitFields(line);
    if (!have_header) {
      for (auto f : fields) names.emplace_back(f);
      cols = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != cols) {
      std::ostringstream os;
      os << "expected " << cols << " fields, found " << fields.size();
      Fail(source, line_no, fields.size() < cols ? fields.size() + 1 : cols + 1,
           os.str());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string_view cell = fields[j];
      double v = 0.0;
      const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() ||
          end != cell.data() + cell.size() || !std::isfinite(v)) {
        Fail(source, line_no, j + 1,
             "not a finite number: '" + std::string(cell) + "'");
      }
      values.push_back(v);
    }
    ++rows;
  }

  if (!have_header) Fail(source, 0, 0, "no header row");
  if (rows == 0) {
    throw InvalidInput(std::string(source) + ": no data rows after header");
  }

  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(static_cast<Index>(i), static_cast<Index>(j)) = values[i * cols + j];
    }
  }
  return DataMatrix(std::move(m), std::move(names));
}

DataMatrix ReadCsv(const std::string& path) {
  if (path == kIrisBuiltin) return ParseCsv(BuiltinIrisCsv(), kIrisBuiltin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ParseCsv(buf.str(), path);
}

void WriteCsv(const DataMatrix& x, std::ostream& out,
              std::optional<int> precision) {
  std::string text;
  const auto& names = x.column_names();
  for (Index j = 0; j < x.cols(); ++j) {
    if (j > 0) text += ',';
    text += names.empty() ? "x" + std::to_string(j + 1)
                          : names[static_cast<std::size_t>(j)];
  }
  text += '\n';
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) {
      if (j > 0) text += ',';
      AppendValue(text, x.values()(i, j), precision);
    }
    text += '\n';
  }
  out << text;
  if (!out) throw IoError("error writing CSV output");
}

}  // namespace sphering::cli
