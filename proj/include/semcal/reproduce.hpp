// Copyright 2026 The semcal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "semcal/confirmation.hpp"
#include "semcal/report.hpp"

namespace semcal::cli {

inline constexpr const char* kStatusMatch = "match";
inline constexpr const char* kStatusMismatch = "MISMATCH";
inline constexpr const char* kStatusDocumented = "documented-discrepancy";

struct Reproduction {
  ReportRecord record;
  bool all_matched;  ///< every row except documented discrepancies is within tolerance
};

/// Recomputes every published worked example (birds, fatty liver, HIV test,
/// swans, GPS CEP, raven crossover) from embedded data and compares.
Reproduction reproduce();

/// Notes comparing the recomputed information of a well-known table with
/// its published value; empty for other tables.
std::vector<std::string> published_table_notes(const ContingencyTable& t, const DocResult& h1);

}  // namespace semcal::cli
