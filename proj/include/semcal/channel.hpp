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

#include <cstddef>
#include <string>
#include <vector>

#include "semcal/distributions.hpp"

namespace semcal {

/// Shannon channel P(H|E). Row j is the selecting rule function P(h_j|E);
/// rows need not sum to 1, but for every evidence letter the column over
/// hypotheses does.
class Channel {
 public:
  /// rows[j][i] = P(h_j | e_i). Throws NegativeMass, NotNormalized or IndexMismatch.
  Channel(Alphabet evidence, std::vector<std::string> hypotheses, std::vector<std::vector<double>> rows,
          double tolerance = kNormalizationTolerance);

  const Alphabet& evidence() const noexcept { return evidence_; }
  const std::vector<std::string>& hypotheses() const noexcept { return hypotheses_; }
  std::size_t hypothesis_count() const noexcept { return rows_.size(); }
  const std::vector<double>& row(std::size_t j) const { return rows_.at(j); }

  /// P(h_j) = sum_i P(e_i) P(h_j|e_i).
  double selection_probability(std::size_t j, const Distribution& prior) const;
  /// P(E|h_j) by Bayes' formula.
  Distribution posterior(std::size_t j, const Distribution& prior) const;

 private:
  Alphabet evidence_;
  std::vector<std::string> hypotheses_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace semcal
