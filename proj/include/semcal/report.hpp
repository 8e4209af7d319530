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

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace semcal {

namespace units {
inline constexpr const char* kBits = "bits";
inline constexpr const char* kDimensionless = "dimensionless";
inline constexpr const char* kLabel = "label";
}  // namespace units

/// One named result. Numeric values may be -inf.
struct ReportOutput {
  std::string name;
  std::variant<double, std::string> value;
  std::string unit;
  // Filled only for comparisons against a reference value.
  std::optional<double> reference;
  std::optional<double> tolerance;
  std::optional<std::string> status;
};

struct ReportRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportOutput> outputs;
  std::vector<std::string> warnings;

  void add(std::string name, double value, std::string unit = units::kDimensionless);
  void add(std::string name, std::string value);

  /// First output with this name; throws std::out_of_range.
  const ReportOutput& output(const std::string& name) const;
};

/// JSON object with keys in the fixed order command, inputs, outputs, warnings.
/// Non-finite numbers are written as the strings "-inf", "inf", "nan".
std::string render_json(const ReportRecord& record);

/// Aligned plain text for people.
std::string render_text(const ReportRecord& record);

}  // namespace semcal
