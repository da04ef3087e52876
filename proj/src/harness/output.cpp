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

#include "pnm/harness/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "pnm/core/error.hpp"
#include "pnm/core/rng.hpp"

namespace pnm::harness {

Json Provenance::to_json() const {
  Json j = {{"config_digest", config_digest}, {"prng", std::string(kRngAlgorithm)}};
  if (seed) j["seed"] = *seed;
  return j;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw DimensionError("CSV row has " + std::to_string(row.size()) + " cells, header has " +
                      std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

CsvTable trajectory_table(const Trajectory& trajectory, const std::vector<std::string>& extra_names,
                          const std::vector<std::vector<double>>& extra_columns) {
  const auto& records = trajectory.records();
  if (extra_names.size() != extra_columns.size()) {
    throw ConfigError("trajectory_table: extra column names and values disagree");
  }
  for (const auto& col : extra_columns) {
    if (col.size() != records.size()) throw ConfigError("trajectory_table: extra column length mismatch");
  }
  bool with_test = false;
  for (const auto& r : records) with_test = with_test || r.test_error.has_value();

  CsvTable table;
  table.header = {"step", "loss", "grad_norm_sq"};
  if (with_test) table.header.push_back("test_error");
  for (const auto& name : extra_names) table.header.push_back(name);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::vector<std::string> row{std::to_string(r.step), format_number(r.loss),
                                 format_number(r.grad_norm_sq)};
    if (with_test) row.push_back(r.test_error ? format_number(*r.test_error) : "");
    for (const auto& col : extra_columns) row.push_back(format_number(col[i]));
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable snapshot_table(const Trajectory& trajectory) {
  CsvTable table;
  Eigen::Index n = -1;
  for (const auto& r : trajectory.records()) {
    if (!r.snapshot) continue;
    if (n < 0) {
      n = r.snapshot->size();
      table.header.push_back("step");
      for (Eigen::Index i = 0; i < n; ++i) table.header.push_back("theta_" + std::to_string(i));
    }
    std::vector<std::string> row{std::to_string(r.step)};
    for (Eigen::Index i = 0; i < n; ++i) row.push_back(format_number((*r.snapshot)[i]));
    table.add_row(std::move(row));
  }
  if (n < 0) table.header = {"step"};
  return table;
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) ensure_directory(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void write_csv(const std::filesystem::path& path, const CsvTable& table, const Provenance& prov) {
  auto out = open_for_write(path);
  out << "# config_digest=" << prov.config_digest << "\n";
  if (prov.seed) out << "# seed=" << *prov.seed << "\n";
  out << "# prng=" << kRngAlgorithm << "\n";
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  close_checked(out, path);
}

void write_json(const std::filesystem::path& path, const Json& json) {
  auto out = open_for_write(path);
  out << json.dump(2) << "\n";
  close_checked(out, path);
}

}  // namespace pnm::harness
