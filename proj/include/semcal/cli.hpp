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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semcal/confirmation.hpp"
#include "semcal/distributions.hpp"
#include "semcal/estimation.hpp"
#include "semcal/report.hpp"
#include "semcal/truth_functions.hpp"

namespace semcal::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kDegenerate = 2 };

/// Normalization tolerance: SEMCAL_TOLERANCE when set, else the default.
/// Throws ParseError for a malformed value.
double tolerance_from_env();

// Input parsing. All throw ParseError on malformed text.
std::vector<double> parse_number_list(const std::string& text, std::size_t expected);
ContingencyTable parse_table(const std::string& text);  ///< "n11,n10,n01,n00"
RateSpec parse_rates(const std::string& text);          ///< "P0,P1,Q0,Q1"
std::pair<double, double> parse_test(const std::string& text);  ///< "sensitivity,specificity"

/// Truth-function spec: crisp:a|b, gauss:center,stddev, belief:b:<inner>,
/// table:v1,v2,... (alphabet order) or table:a=v1,b=v2, not:<inner>,
/// const:v, tautology, contradiction.
TruthFunction parse_truth_function(const std::string& spec, const Alphabet& alphabet);

/// label,probability[,position] lines; '#' comments and a header line are skipped.
Distribution parse_distribution_csv(const std::string& text, double tolerance = kNormalizationTolerance);
Distribution read_distribution_csv(const std::string& path, double tolerance = kNormalizationTolerance);

/// condition,label lines.
std::vector<Sample> parse_samples_csv(const std::string& text);
std::vector<Sample> read_samples_csv(const std::string& path);

// Commands. Each is a thin wrapper returning the report it would print.
struct DocInput {
  std::optional<std::string> table;
  std::optional<std::string> rates;
  std::optional<std::string> test;
  std::optional<double> prevalence;  ///< P(e1) for the information of test results
};
ReportRecord cmd_doc(const DocInput& input);

ReportRecord cmd_info(const std::string& prior_path, const std::string& sampling_path, const std::string& tf_spec,
                      double tolerance = kNormalizationTolerance);

struct MsieInput {
  std::string samples_path;
  std::optional<std::string> prior_path;
  bool gps = false;
  std::optional<std::size_t> cells;
  double step = 1.0;
};
ReportRecord cmd_msie(const MsieInput& input, double tolerance = kNormalizationTolerance);

struct GpsSimulation {
  std::size_t cells = 200;
  double step = 1.0;
  double delta_e = 0.0;
  double d = 5.0;
  double c = 0.0;
  std::size_t draws = 100000;
  unsigned long long seed = 1;
};
/// "reported,true" cell pairs drawn from the deviation model, as samples CSV text.
std::string simulate_gps_csv(const GpsSimulation& sim);

/// Full command line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semcal::cli
