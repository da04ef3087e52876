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

#ifndef PNM_HARNESS_JSON_UTIL_HPP
#define PNM_HARNESS_JSON_UTIL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pnm/core/param_vector.hpp"

namespace pnm::harness {

using Json = nlohmann::json;

/// Reads fields of one JSON object and rejects any key that was never asked
/// for. Every error message carries the dotted path of the offending field.
class ObjectReader {
 public:
  ObjectReader(const Json& object, std::string path);

  bool has(const std::string& key) const;
  const Json& raw(const std::string& key);
  std::string path_of(const std::string& key) const { return path_ + "." + key; }

  double number(const std::string& key, double fallback);
  double number(const std::string& key);
  std::int64_t integer(const std::string& key, std::int64_t fallback);
  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback);
  bool boolean(const std::string& key, bool fallback);
  std::string string(const std::string& key, const std::string& fallback);
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback);
  std::vector<std::int64_t> integers(const std::string& key,
                                     const std::vector<std::int64_t>& fallback);

  /// Throws ConfigError naming every key that was not read.
  void finish() const;

 private:
  const Json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

std::uint64_t fnv1a64(std::string_view bytes);
/// 16 lowercase hex digits.
std::string hex64(std::uint64_t value);

/// {"rows": r, "cols": c, "data": [row-major]}.
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

}  // namespace pnm::harness

#endif  // PNM_HARNESS_JSON_UTIL_HPP
