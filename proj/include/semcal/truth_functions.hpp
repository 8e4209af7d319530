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

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "semcal/distributions.hpp"

namespace semcal {

/// Fuzzy truth function T(A|E): the membership grade of each evidence point
/// in the fuzzy set A, always in [0,1].
///
/// Values are immutable and cheap to copy; composite functions share their
/// operands.
class TruthFunction {
 public:
  enum class Kind { Constant, Crisp, Gaussian, Tabular, BeliefAdjusted, Complement };

  static TruthFunction constant(double value);
  static TruthFunction tautology() { return constant(1.0); }
  static TruthFunction contradiction() { return constant(0.0); }

  /// 1 on the listed labels, 0 elsewhere.
  static TruthFunction crisp(std::set<std::string> positive_set);

  /// exp(-(x - center)^2 / (2 stddev^2)), evaluated at the evidence position.
  static TruthFunction gaussian(double center, double stddev);

  static TruthFunction tabular(std::map<std::string, double> values);
  static TruthFunction tabular(const Alphabet& alphabet, const std::vector<double>& values);

  Kind kind() const noexcept;

  /// Throws UnknownLabel when the function has no value for the evidence.
  double operator()(const Evidence& e) const;

  /// Textual form understood by the command-line parser.
  std::string describe() const;

  // Structural accessors, valid only for the matching kind.
  double constant_value() const;
  const std::set<std::string>& crisp_set() const;
  bool crisp_complemented() const;
  double belief() const;
  const TruthFunction& base() const;

 private:
  struct Node;
  explicit TruthFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend TruthFunction negate(const TruthFunction& tf);
  friend TruthFunction belief_adjust(const TruthFunction& tf, double belief);
};

double evaluate(const TruthFunction& tf, const Evidence& e);
double evaluate(const TruthFunction& tf, const Alphabet& alphabet, std::size_t i);
/// Evaluation at a bare real coordinate (no label).
double evaluate(const TruthFunction& tf, double x);

/// Truth values at every letter of the alphabet, in alphabet order.
std::vector<double> truth_values(const TruthFunction& tf, const Alphabet& alphabet);

/// T(A) = sum_i P(e_i) T(A|e_i).
double logical_probability(const TruthFunction& tf, const Distribution& prior);

/// P(E|A) = P(E) T(A|E) / T(A). Throws ZeroLogicalProbability when T(A) = 0.
Distribution semantic_bayes(const Distribution& prior, const TruthFunction& tf);

/// Zadeh complement, 1 - T(A|E).
TruthFunction negate(const TruthFunction& tf);

/// Mixes tf with the tautology by degree of belief b in [-1, 1]:
///   b >= 0:  (1 - b) + b T(E)
///   b <  0:  1 + b T(E)
/// Throws BeliefOutOfRange when |b| > 1.
TruthFunction belief_adjust(const TruthFunction& tf, double belief);

}  // namespace semcal
