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

#include "semcal/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "semcal/numfmt.hpp"

namespace semcal {

namespace {

using Json = nlohmann::ordered_json;

Json number(double x) {
  if (!std::isfinite(x)) return shortest(x);
  return x;
}

std::string human(double x) {
  if (!std::isfinite(x)) return shortest(x);
  return fmt::format("{:.10g}", x);
}

}  // namespace

void ReportRecord::add(std::string name, double value, std::string unit) {
  outputs.push_back({std::move(name), value, std::move(unit), std::nullopt, std::nullopt, std::nullopt});
}

void ReportRecord::add(std::string name, std::string value) {
  outputs.push_back({std::move(name), std::move(value), units::kLabel, std::nullopt, std::nullopt, std::nullopt});
}

const ReportOutput& ReportRecord::output(const std::string& name) const {
  for (const auto& o : outputs) {
    if (o.name == name) return o;
  }
  throw std::out_of_range("no output named " + name);
}

std::string render_json(const ReportRecord& record) {
  Json doc;
  doc["command"] = record.command;
  Json inputs = Json::object();
  for (const auto& [k, v] : record.inputs) inputs[k] = v;
  doc["inputs"] = std::move(inputs);
  Json outputs = Json::array();
  for (const auto& o : record.outputs) {
    Json item;
    item["name"] = o.name;
    if (const double* x = std::get_if<double>(&o.value)) {
      item["value"] = number(*x);
    } else {
      item["value"] = std::get<std::string>(o.value);
    }
    item["unit"] = o.unit;
    if (o.reference) {
      item["reference"] = number(*o.reference);
      if (const double* x = std::get_if<double>(&o.value)) item["delta"] = number(std::abs(*x - *o.reference));
    }
    if (o.tolerance) item["tolerance"] = number(*o.tolerance);
    if (o.status) item["status"] = *o.status;
    outputs.push_back(std::move(item));
  }
  doc["outputs"] = std::move(outputs);
  doc["warnings"] = record.warnings;
  return doc.dump(2) + "\n";
}

std::string render_text(const ReportRecord& record) {
  std::string out = "command: " + record.command + "\n";
  for (const auto& [k, v] : record.inputs) out += fmt::format("  input {} = {}\n", k, v);

  std::size_t width = 0;
  for (const auto& o : record.outputs) width = std::max(width, o.name.size());
  for (const auto& o : record.outputs) {
    std::string value;
    if (const double* x = std::get_if<double>(&o.value)) {
      value = human(*x);
    } else {
      value = std::get<std::string>(o.value);
    }
    std::string line = fmt::format("{:<{}}  {:>16}", o.name, width, value);
    if (o.unit != units::kLabel && o.unit != units::kDimensionless) line += " " + o.unit;
    if (o.reference) {
      line += fmt::format("   reference={}", human(*o.reference));
      if (const double* x = std::get_if<double>(&o.value)) line += fmt::format(" |delta|={:.3g}", std::abs(*x - *o.reference));
    }
    if (o.status) line += "  [" + *o.status + "]";
    out += line + "\n";
  }
  for (const auto& w : record.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace semcal
