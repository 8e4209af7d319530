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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semcal {

/// Normalization tolerance used when none is supplied explicitly.
inline constexpr double kNormalizationTolerance = 1e-9;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// A single evidence point. Discrete truth functions look at the label;
/// Gaussian truth functions look at the position.
struct Evidence {
  std::string label;
  std::optional<double> position;
};

/// Ordered set of distinct evidence labels. Index i of a label is its
/// position in the list. Labels may optionally carry a real coordinate;
/// when none is given, a label that parses as a number acts as its own
/// coordinate.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);
  Alphabet(std::vector<std::string> labels, std::vector<double> positions);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  std::optional<double> position(std::size_t i) const;
  Evidence evidence(std::size_t i) const { return {labels_.at(i), position(i)}; }

  bool operator==(const Alphabet& other) const noexcept { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<double>> positions_;
};

/// Checks the probability-vector invariants against an alphabet.
/// Throws NegativeMass, NotNormalized or AlphabetMismatch.
void validate(const Alphabet& alphabet, std::span<const double> probs,
              double tolerance = kNormalizationTolerance);

/// Finite discrete distribution. Always valid once constructed; inputs that
/// sum to 1 within tolerance are rescaled to sum to 1.
class Distribution {
 public:
  Distribution(Alphabet alphabet, std::vector<double> probs,
               double tolerance = kNormalizationTolerance);

  /// Convenience for anonymous alphabets labelled e1..em.
  static Distribution over_indices(std::vector<double> probs,
                                   double tolerance = kNormalizationTolerance);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  double at(const std::string& label) const { return probs_.at(alphabet_.index_of(label)); }
  std::span<const double> probs() const noexcept { return probs_; }

 private:
  Alphabet alphabet_;
  std::vector<double> probs_;
};

/// Throws AlphabetMismatch unless both alphabets carry the same labels in the same order.
void require_same_alphabet(const Alphabet& a, const Alphabet& b);

/// log2(posterior / prior) in bits. Returns -inf when posterior is 0.
/// Throws ZeroPrior when prior <= 0.
double pointwise_info(double posterior_prob, double prior_prob);

/// KL(q || p) in bits, with 0 log(0/p) = 0.
double kl_divergence(const Distribution& q, const Distribution& p);

/// P(E|h) from P(E) and the selecting rule P(h|E) by Bayes' formula.
/// Throws ZeroSelectionMass when sum_i P(e_i) P(h|e_i) is 0.
Distribution bayes_invert(const Distribution& prior, std::span<const double> channel_row);

/// sum_i P(e_i) P(h|e_i), the probability that h is selected.
double selection_probability(const Distribution& prior, std::span<const double> channel_row);

}  // namespace semcal
