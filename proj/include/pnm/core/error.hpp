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

#ifndef PNM_CORE_ERROR_HPP
#define PNM_CORE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pnm {

// Base class for every error raised by the library. The harness maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid hyperparameters, unknown names, malformed configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operand shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Non-finite values or a run that left its stability region.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::int64_t step = -1)
      : Error(step >= 0 ? what + " (step " + std::to_string(step) + ")" : what),
        step_(step) {}

  std::int64_t step() const noexcept { return step_; }

 private:
  std::int64_t step_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pnm

#endif  // PNM_CORE_ERROR_HPP
