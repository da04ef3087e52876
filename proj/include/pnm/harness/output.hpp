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

#ifndef PNM_HARNESS_OUTPUT_HPP
#define PNM_HARNESS_OUTPUT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pnm/core/trajectory.hpp"
#include "pnm/harness/json_util.hpp"

namespace pnm::harness {

/// Written into every output file.
struct Provenance {
  std::string config_digest;
  std::optional<std::uint64_t> seed;

  /// {"config_digest", "seed" (when set), "prng"}.
  Json to_json() const;
};

/// Shortest decimal that round-trips; "nan" / "inf" / "-inf" otherwise.
std::string format_number(double value);

/// A CSV table. Files start with "# key=value" provenance lines, then the
/// header row, then the data rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// Columns step, loss, grad_norm_sq, then test_error when any record has
/// one, then each named extra column.
CsvTable trajectory_table(const Trajectory& trajectory,
                          const std::vector<std::string>& extra_names = {},
                          const std::vector<std::vector<double>>& extra_columns = {});

/// step followed by theta_0 .. theta_{n-1} for each record carrying a snapshot.
CsvTable snapshot_table(const Trajectory& trajectory);

void ensure_directory(const std::filesystem::path& dir);
void write_csv(const std::filesystem::path& path, const CsvTable& table, const Provenance& prov);
/// Pretty-printed with sorted keys and a trailing newline.
void write_json(const std::filesystem::path& path, const Json& json);

}  // namespace pnm::harness

#endif  // PNM_HARNESS_OUTPUT_HPP
