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

#include "semcal/channel.hpp"

#include <cmath>

#include "semcal/error.hpp"
#include "semcal/numfmt.hpp"

namespace semcal {

Channel::Channel(Alphabet evidence, std::vector<std::string> hypotheses, std::vector<std::vector<double>> rows,
                 double tolerance)
    : evidence_(std::move(evidence)), hypotheses_(std::move(hypotheses)), rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorKind::IndexMismatch, "channel has no hypotheses");
  if (hypotheses_.size() != rows_.size()) {
    throw Error(ErrorKind::IndexMismatch, "one hypothesis name per channel row is required");
  }
  for (const auto& r : rows_) {
    if (r.size() != evidence_.size()) throw Error(ErrorKind::IndexMismatch, "channel row length differs from alphabet");
    for (double v : r) {
      if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::NegativeMass, "channel values must lie in [0,1]");
    }
  }
  for (std::size_t i = 0; i < evidence_.size(); ++i) {
    double col = 0.0;
    for (const auto& r : rows_) col += r[i];
    if (std::abs(col - 1.0) > tolerance) {
      throw Error(ErrorKind::NotNormalized,
                  "P(H|" + evidence_.label(i) + ") sums to " + shortest(col) + " over hypotheses");
    }
  }
}

double Channel::selection_probability(std::size_t j, const Distribution& prior) const {
  require_same_alphabet(evidence_, prior.alphabet());
  return semcal::selection_probability(prior, rows_.at(j));
}

Distribution Channel::posterior(std::size_t j, const Distribution& prior) const {
  require_same_alphabet(evidence_, prior.alphabet());
  return bayes_invert(prior, rows_.at(j));
}

}  // namespace semcal
