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

#include <string>
#include <vector>

#include "semcal/channel.hpp"
#include "semcal/distributions.hpp"
#include "semcal/truth_functions.hpp"

namespace semcal {

/// Logical probabilities below this, with some positive truth value, are
/// treated as zero rather than as a contradiction.
inline constexpr double kMinLogicalProbability = 1e-12;

/// I(e; h) = log2(T(A|e) / T(A)) in bits. A contradiction carries 0 bits;
/// a zero truth value on a non-contradiction is -inf.
double pointwise_semantic_info(const TruthFunction& tf, const Distribution& prior, const std::string& label);
double pointwise_semantic_info(const TruthFunction& tf, const Distribution& prior, std::size_t index);

/// I(E; h) = sum_i P(e_i|h) log2(T(A|e_i) / T(A)), the sampling-weighted
/// average of the pointwise information. A single positive-mass evidence
/// with zero truth value makes the result -inf.
double average_semantic_info(const TruthFunction& tf, const Distribution& prior, const Distribution& sampling);

struct GklParts {
  double kl_info;  ///< KL(sampling || prior), the attainable maximum.
  double penalty;  ///< KL(sampling || semantic_bayes(prior, tf)); +inf when the likelihood misses sampled mass.
};

/// Splits the average semantic information into kl_info - penalty.
GklParts gkl_decomposition(const TruthFunction& tf, const Distribution& prior, const Distribution& sampling);

/// sum_j P(h_j) I(E; h_j) with P(E|h_j) taken from the channel.
/// Throws IndexMismatch unless there is one truth function per hypothesis.
double semantic_mutual_info(const Channel& channel, const Distribution& prior,
                            const std::vector<TruthFunction>& tfs);

}  // namespace semcal
