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
#include <set>
#include <string>
#include <vector>

#include "semcal/channel.hpp"
#include "semcal/confirmation.hpp"
#include "semcal/distributions.hpp"
#include "semcal/truth_functions.hpp"

namespace semcal {

struct Sample {
  std::string condition;  ///< observed condition tag z
  std::string label;      ///< evidence e(t)
};

/// Labelled observations (condition, evidence) over a fixed alphabet.
class SampleSet {
 public:
  /// Throws UnknownLabel if a record's label is outside the alphabet.
  SampleSet(Alphabet alphabet, std::vector<Sample> records);
  /// Alphabet taken from the labels in order of first appearance.
  explicit SampleSet(std::vector<Sample> records);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Sample>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

  /// Distinct condition tags in order of first appearance.
  std::vector<std::string> conditions() const;
  /// w_i for the records whose condition is in the subset (all records when empty).
  std::vector<double> counts(const std::set<std::string>& condition_subset = {}) const;
  /// Relative label frequencies over every record.
  Distribution marginal() const;

 private:
  Alphabet alphabet_;
  std::vector<Sample> records_;
};

/// P(e_i | C) = w_i / w over records whose condition is in the subset.
/// Throws EmptyConditionSubset when no record matches.
Distribution empirical_conditional(const SampleSet& samples, const std::set<std::string>& condition_subset);

/// Scales a non-negative selecting-rule row to maximum 1. Constant rows give
/// the tautology and 0/1 rows a crisp function. Throws ZeroRow.
TruthFunction truth_function_from_row(const Alphabet& alphabet, const std::vector<double>& row);

/// T(A_j|E) = P(h_j|E) / max_k P(h_j|e_k), the truth function that makes
/// the semantic channel match the Shannon channel.
TruthFunction optimal_truth_function(const Channel& channel, std::size_t j, const Distribution& prior);

/// Degree of confirmation of a general hypothesis: the b in [-1,1] that
/// maximizes the average semantic information of belief_adjust(base, b).
/// Each sign branch is bracketed on a coarse grid and refined by
/// golden-section search. Ties with the tautology resolve to b = 0.
/// Throws DegenerateInput when base is identically 0 on the alphabet.
DocResult optimize_belief(const TruthFunction& base, const Distribution& prior, const Distribution& sampling);

/// Per-condition result of maximum semantic information estimation.
struct MsieHypothesis {
  std::string condition;
  double selection_probability;  ///< share of records carrying this condition
  Distribution sampling;         ///< P(E | condition)
  TruthFunction truth;           ///< optimized truth function, max 1
  std::vector<double> truth_values;
  DocResult doc;  ///< DOC of the crisp hypothesis "E is one of the best-supported labels"
  double information_bits;  ///< average semantic information of `truth`
};

/// Fits one truth function per condition tag by T(A_j|E) proportional to
/// P(E|C_j)/P(E). The prior defaults to the label marginal of the samples.
std::vector<MsieHypothesis> msie(const SampleSet& samples, const std::optional<Distribution>& prior = std::nullopt);

}  // namespace semcal
