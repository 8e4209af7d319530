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

#include "semcal/estimation.hpp"

#include <algorithm>

#include "semcal/error.hpp"
#include "semcal/golden_section.hpp"
#include "semcal/semantic_info.hpp"

namespace semcal {

namespace {

Alphabet alphabet_from_records(const std::vector<Sample>& records) {
  std::vector<std::string> labels;
  for (const auto& r : records) {
    if (std::find(labels.begin(), labels.end(), r.label) == labels.end()) labels.push_back(r.label);
  }
  return Alphabet(std::move(labels));
}

// Branch optima closer than this to the tautology's 0 bits count as ties.
constexpr double kTieBits = 1e-14;

}  // namespace

SampleSet::SampleSet(Alphabet alphabet, std::vector<Sample> records)
    : alphabet_(std::move(alphabet)), records_(std::move(records)) {
  for (const auto& r : records_) alphabet_.index_of(r.label);
}

SampleSet::SampleSet(std::vector<Sample> records)
    : alphabet_(alphabet_from_records(records)), records_(std::move(records)) {}

std::vector<std::string> SampleSet::conditions() const {
  std::vector<std::string> out;
  for (const auto& r : records_) {
    if (std::find(out.begin(), out.end(), r.condition) == out.end()) out.push_back(r.condition);
  }
  return out;
}

std::vector<double> SampleSet::counts(const std::set<std::string>& condition_subset) const {
  std::vector<double> w(alphabet_.size(), 0.0);
  for (const auto& r : records_) {
    if (condition_subset.empty() || condition_subset.count(r.condition)) w[alphabet_.index_of(r.label)] += 1.0;
  }
  return w;
}

Distribution SampleSet::marginal() const {
  if (records_.empty()) throw Error(ErrorKind::EmptyConditionSubset, "sample set is empty");
  auto w = counts();
  for (auto& x : w) x /= static_cast<double>(records_.size());
  return Distribution(alphabet_, std::move(w));
}

Distribution empirical_conditional(const SampleSet& samples, const std::set<std::string>& condition_subset) {
  if (condition_subset.empty()) throw Error(ErrorKind::EmptyConditionSubset, "condition subset is empty");
  auto w = samples.counts(condition_subset);
  double total = 0.0;
  for (double x : w) total += x;
  if (total == 0.0) throw Error(ErrorKind::EmptyConditionSubset, "no record matches the condition subset");
  for (auto& x : w) x /= total;
  return Distribution(samples.alphabet(), std::move(w));
}

TruthFunction truth_function_from_row(const Alphabet& alphabet, const std::vector<double>& row) {
  if (row.size() != alphabet.size()) throw Error(ErrorKind::IndexMismatch, "row length differs from alphabet");
  double peak = 0.0;
  for (double v : row) {
    if (!(v >= 0.0)) throw Error(ErrorKind::NegativeMass, "selecting rule values must be non-negative");
    peak = std::max(peak, v);
  }
  if (!(peak > 0.0)) throw Error(ErrorKind::ZeroRow, "selecting rule row is identically 0");

  std::vector<double> values(row.size());
  bool all_one = true;
  bool zero_one = true;
  std::set<std::string> ones;
  for (std::size_t i = 0; i < row.size(); ++i) {
    values[i] = row[i] == peak ? 1.0 : row[i] / peak;
    all_one = all_one && values[i] == 1.0;
    zero_one = zero_one && (values[i] == 0.0 || values[i] == 1.0);
    if (values[i] == 1.0) ones.insert(alphabet.label(i));
  }
  if (all_one) return TruthFunction::tautology();
  if (zero_one) return TruthFunction::crisp(std::move(ones));
  return TruthFunction::tabular(alphabet, values);
}

TruthFunction optimal_truth_function(const Channel& channel, std::size_t j, const Distribution& prior) {
  require_same_alphabet(channel.evidence(), prior.alphabet());
  if (j >= channel.hypothesis_count()) throw Error(ErrorKind::IndexMismatch, "hypothesis index out of range");
  return truth_function_from_row(channel.evidence(), channel.row(j));
}

DocResult optimize_belief(const TruthFunction& base, const Distribution& prior, const Distribution& sampling) {
  require_same_alphabet(prior.alphabet(), sampling.alphabet());
  const auto values = truth_values(base, prior.alphabet());
  if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) {
    throw Error(ErrorKind::DegenerateInput, "base truth function is identically 0");
  }

  const auto objective = [&](double b) {
    return average_semantic_info(belief_adjust(base, std::clamp(b, -1.0, 1.0)), prior, sampling);
  };
  const ScalarOptimum pos = bracketed_maximize(objective, 0.0, 1.0);
  const ScalarOptimum neg = bracketed_maximize(objective, -1.0, 0.0);
  ScalarOptimum best = pos.value >= neg.value ? pos : neg;
  const double at_zero = objective(0.0);
  if (best.value <= at_zero + kTieBits) best = {0.0, at_zero};

  const double b = std::clamp(best.x, -1.0, 1.0);
  return {b, 1.0 - std::abs(b), b >= 0.0 ? DocCase::ProperAffirmation : DocCase::ExcessiveAffirmation, best.value};
}

std::vector<MsieHypothesis> msie(const SampleSet& samples, const std::optional<Distribution>& prior_in) {
  const Distribution prior = prior_in ? *prior_in : samples.marginal();
  require_same_alphabet(prior.alphabet(), samples.alphabet());
  const auto& alphabet = samples.alphabet();

  std::vector<MsieHypothesis> out;
  for (const auto& condition : samples.conditions()) {
    Distribution sampling = empirical_conditional(samples, {condition});
    // Selecting rule up to a constant factor: P(h_j|e_i) is proportional to P(e_i|C_j)/P(e_i).
    std::vector<double> rule(alphabet.size(), 0.0);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (sampling[i] == 0.0) continue;
      if (prior[i] == 0.0) {
        throw Error(ErrorKind::AbsoluteContinuityViolated,
                    "label '" + alphabet.label(i) + "' is sampled but has zero prior");
      }
      rule[i] = sampling[i] / prior[i];
    }
    TruthFunction truth = truth_function_from_row(alphabet, rule);
    auto values = truth_values(truth, alphabet);

    std::set<std::string> best_supported;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (values[i] == 1.0) best_supported.insert(alphabet.label(i));
    }
    const DocResult doc = optimize_belief(TruthFunction::crisp(best_supported), prior, sampling);
    const double info = average_semantic_info(truth, prior, sampling);
    double matched = 0.0;
    for (double w : samples.counts({condition})) matched += w;
    out.push_back({condition, matched / static_cast<double>(samples.size()), std::move(sampling), std::move(truth),
                   std::move(values), doc, info});
  }
  return out;
}

}  // namespace semcal
