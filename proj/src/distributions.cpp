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

#include "semcal/distributions.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "semcal/error.hpp"

namespace semcal {

namespace {

std::optional<double> parse_number(const std::string& s) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(ErrorKind::InvalidAlphabet, "alphabet is empty");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorKind::InvalidAlphabet, "duplicate label '" + l + "'");
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  check_labels(labels_);
  positions_.reserve(labels_.size());
  for (const auto& l : labels_) positions_.push_back(parse_number(l));
}

Alphabet::Alphabet(std::vector<std::string> labels, std::vector<double> positions)
    : labels_(std::move(labels)) {
  check_labels(labels_);
  if (positions.size() != labels_.size()) {
    throw Error(ErrorKind::IndexMismatch, "one position per label is required");
  }
  positions_.assign(positions.begin(), positions.end());
}

std::optional<std::size_t> Alphabet::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Alphabet::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownLabel, "label '" + label + "' is not in the alphabet");
}

std::optional<double> Alphabet::position(std::size_t i) const { return positions_.at(i); }

void validate(const Alphabet& alphabet, std::span<const double> probs, double tolerance) {
  if (probs.size() != alphabet.size()) {
    throw Error(ErrorKind::AlphabetMismatch, "expected " + std::to_string(alphabet.size()) +
                                                 " probabilities, got " + std::to_string(probs.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0) || !std::isfinite(probs[i])) {
      throw Error(ErrorKind::NegativeMass, "probability of '" + alphabet.label(i) + "' is " +
                                               std::to_string(probs[i]));
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw Error(ErrorKind::NotNormalized, "probabilities sum to " + std::to_string(sum));
  }
}

Distribution::Distribution(Alphabet alphabet, std::vector<double> probs, double tolerance)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  validate(alphabet_, probs_, tolerance);
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  for (auto& p : probs_) p /= sum;
}

Distribution Distribution::over_indices(std::vector<double> probs, double tolerance) {
  std::vector<std::string> labels;
  labels.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
  return Distribution(Alphabet(std::move(labels)), std::move(probs), tolerance);
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw Error(ErrorKind::AlphabetMismatch, "distributions are over different alphabets");
}

double pointwise_info(double posterior_prob, double prior_prob) {
  if (!(prior_prob > 0.0)) throw Error(ErrorKind::ZeroPrior, "prior probability must be positive");
  if (posterior_prob == 0.0) return kNegInf;
  return std::log2(posterior_prob / prior_prob);
}

double kl_divergence(const Distribution& q, const Distribution& p) {
  require_same_alphabet(q.alphabet(), p.alphabet());
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0.0) continue;
    if (p[i] == 0.0) {
      throw Error(ErrorKind::AbsoluteContinuityViolated,
                  "q has mass on '" + q.alphabet().label(i) + "' where p has none");
    }
    sum += q[i] * std::log2(q[i] / p[i]);
  }
  // Rounding can leave tiny negatives for q == p.
  return sum < 0.0 ? 0.0 : sum;
}

double selection_probability(const Distribution& prior, std::span<const double> channel_row) {
  if (channel_row.size() != prior.size()) {
    throw Error(ErrorKind::AlphabetMismatch, "channel row length differs from the alphabet size");
  }
  double mass = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (!(channel_row[i] >= 0.0 && channel_row[i] <= 1.0)) {
      throw Error(ErrorKind::NegativeMass, "channel values must lie in [0,1]");
    }
    mass += prior[i] * channel_row[i];
  }
  return mass;
}

Distribution bayes_invert(const Distribution& prior, std::span<const double> channel_row) {
  const double mass = selection_probability(prior, channel_row);
  if (!(mass > 0.0)) throw Error(ErrorKind::ZeroSelectionMass, "hypothesis is never selected");
  std::vector<double> out(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) out[i] = prior[i] * channel_row[i] / mass;
  return Distribution(prior.alphabet(), std::move(out));
}

}  // namespace semcal
