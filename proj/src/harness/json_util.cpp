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

#include "pnm/harness/json_util.hpp"

#include <cmath>
#include <cstdio>

#include "pnm/core/error.hpp"

namespace pnm::harness {

ObjectReader::ObjectReader(const Json& object, std::string path)
    : object_(object), path_(std::move(path)) {
  if (!object_.is_object()) throw ConfigError(path_ + " must be a JSON object");
}

bool ObjectReader::has(const std::string& key) const { return object_.contains(key); }

const Json& ObjectReader::raw(const std::string& key) {
  seen_.insert(key);
  if (!object_.contains(key)) throw ConfigError("missing required field " + path_of(key));
  return object_.at(key);
}

double ObjectReader::number(const std::string& key) {
  const Json& v = raw(key);
  if (!v.is_number()) throw ConfigError(path_of(key) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path_of(key) + " must be finite");
  return x;
}

double ObjectReader::number(const std::string& key, double fallback) {
  seen_.insert(key);
  return has(key) ? number(key) : fallback;
}

std::int64_t ObjectReader::integer(const std::string& key, std::int64_t fallback) {
  seen_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isfinite(x) && std::floor(x) == x && std::abs(x) < 9.0e15) {
      return static_cast<std::int64_t>(x);
    }
  }
  throw ConfigError(path_of(key) + " must be an integer");
}

std::uint64_t ObjectReader::unsigned_integer(const std::string& key, std::uint64_t fallback) {
  seen_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const std::int64_t x = integer(key, 0);
  if (x < 0) throw ConfigError(path_of(key) + " must be >= 0");
  return static_cast<std::uint64_t>(x);
}

bool ObjectReader::boolean(const std::string& key, bool fallback) {
  seen_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (!v.is_boolean()) throw ConfigError(path_of(key) + " must be true or false");
  return v.get<bool>();
}

std::string ObjectReader::string(const std::string& key, const std::string& fallback) {
  seen_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (!v.is_string()) throw ConfigError(path_of(key) + " must be a string");
  return v.get<std::string>();
}

std::vector<double> ObjectReader::numbers(const std::string& key,
                                          const std::vector<double>& fallback) {
  seen_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (!v.is_array()) throw ConfigError(path_of(key) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw ConfigError(path_of(key) + " must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<std::int64_t> ObjectReader::integers(const std::string& key,
                                                 const std::vector<std::int64_t>& fallback) {
  seen_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (!v.is_array()) throw ConfigError(path_of(key) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& e : v) {
    if (e.is_number_integer()) {
      out.push_back(e.get<std::int64_t>());
    } else if (e.is_number_float() && std::floor(e.get<double>()) == e.get<double>()) {
      out.push_back(static_cast<std::int64_t>(e.get<double>()));
    } else {
      throw ConfigError(path_of(key) + " must be an array of integers");
    }
  }
  return out;
}

void ObjectReader::finish() const {
  std::string unknown;
  for (const auto& item : object_.items()) {
    if (seen_.count(item.key()) == 0) {
      if (!unknown.empty()) unknown += ", ";
      unknown += path_of(item.key());
    }
  }
  if (!unknown.empty()) throw ConfigError("unknown config key(s): " + unknown);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace pnm::harness
