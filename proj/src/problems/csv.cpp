// Copyright 2026 The pnm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pnm/problems/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnm/core/error.hpp"

namespace pnm::problems {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view field) {
  field = trim(field);
  if (field.empty()) return std::nullopt;
  if (field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

FiniteDataset parse_csv_dataset(std::istream& in, bool classification) {
  std::vector<std::vector<double>> rows;
  std::size_t columns = 0;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto fields = split(text);
    std::vector<double> values;
    values.reserve(fields.size());
    bool numeric = true;
    for (auto f : fields) {
      const auto v = parse_number(f);
      if (!v) {
        numeric = false;
        break;
      }
      values.push_back(*v);
    }
    if (!seen_content) {
      seen_content = true;
      columns = fields.size();
      if (!numeric) continue;  // header
    }
    if (!numeric) throw IoError("csv line " + std::to_string(line_no) + ": non-numeric field");
    if (fields.size() != columns) {
      throw IoError("csv line " + std::to_string(line_no) + ": expected " +
                    std::to_string(columns) + " columns, found " + std::to_string(fields.size()));
    }
    if (columns < 2) {
      throw IoError("csv line " + std::to_string(line_no) + ": need features and a label");
    }
    for (double v : values) {
      if (!std::isfinite(v)) throw IoError("csv line " + std::to_string(line_no) + ": non-finite value");
    }
    if (classification) {
      const double y = values.back();
      if (y < 0 || y != std::floor(y)) {
        throw IoError("csv line " + std::to_string(line_no) + ": label is not a class index");
      }
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw IoError("csv: no data rows");

  FiniteDataset data;
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto d = static_cast<Eigen::Index>(columns - 1);
  data.features.resize(n, d);
  data.labels.reserve(rows.size());
  double max_label = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < d; ++c) data.features(r, c) = row[static_cast<std::size_t>(c)];
    data.labels.push_back(row.back());
    max_label = std::max(max_label, row.back());
  }
  if (classification) data.num_classes = static_cast<std::size_t>(max_label) + 1;
  return data;
}

FiniteDataset load_csv_dataset(const std::filesystem::path& path, bool classification) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset '" + path.string() + "'");
  return parse_csv_dataset(in, classification);
}

}  // namespace pnm::problems
