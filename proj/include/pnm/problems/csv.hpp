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

#ifndef PNM_PROBLEMS_CSV_HPP
#define PNM_PROBLEMS_CSV_HPP

#include <filesystem>
#include <istream>

#include "pnm/problems/dataset.hpp"

namespace pnm::problems {

/// Comma-separated numeric rows; the last column is the label. An optional
/// header is recognized when the first non-empty line is not all numeric.
/// With `classification` the labels must be non-negative integers and K is
/// max label + 1. Any malformed row raises IoError naming the line.
FiniteDataset parse_csv_dataset(std::istream& in, bool classification);
FiniteDataset load_csv_dataset(const std::filesystem::path& path, bool classification);

}  // namespace pnm::problems

#endif  // PNM_PROBLEMS_CSV_HPP
