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

#include "semcal/semantic_info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semcal/error.hpp"

namespace semcal {

namespace {

struct Truth {
  std::vector<double> values;
  double logical;
  bool contradiction;
};

Truth truth_under(const TruthFunction& tf, const Distribution& prior) {
  Truth t{truth_values(tf, prior.alphabet()), 0.0, false};
  for (std::size_t i = 0; i < prior.size(); ++i) t.logical += prior[i] * t.values[i];
  t.contradiction = std::all_of(t.values.begin(), t.values.end(), [](double v) { return v == 0.0; });
  if (!t.contradiction && t.logical < kMinLogicalProbability) {
    throw Error(ErrorKind::ZeroLogicalProbability, "logical probability is zero under this prior");
  }
  return t;
}

}  // namespace

double pointwise_semantic_info(const TruthFunction& tf, const Distribution& prior, std::size_t index) {
  const Truth t = truth_under(tf, prior);
  if (t.contradiction) return 0.0;
  const double v = t.values.at(index);
  if (v == 0.0) return kNegInf;
  return std::log2(v / t.logical);
}

double pointwise_semantic_info(const TruthFunction& tf, const Distribution& prior, const std::string& label) {
  return pointwise_semantic_info(tf, prior, prior.alphabet().index_of(label));
}

double average_semantic_info(const TruthFunction& tf, const Distribution& prior, const Distribution& sampling) {
  require_same_alphabet(prior.alphabet(), sampling.alphabet());
  const Truth t = truth_under(tf, prior);
  if (t.contradiction) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < sampling.size(); ++i) {
    if (sampling[i] == 0.0) continue;
    if (t.values[i] == 0.0) return kNegInf;
    sum += sampling[i] * std::log2(t.values[i] / t.logical);
  }
  return sum;
}

GklParts gkl_decomposition(const TruthFunction& tf, const Distribution& prior, const Distribution& sampling) {
  require_same_alphabet(prior.alphabet(), sampling.alphabet());
  const double kl_info = kl_divergence(sampling, prior);
  const Truth t = truth_under(tf, prior);
  if (t.contradiction) return {kl_info, kl_info};
  double penalty = 0.0;
  for (std::size_t i = 0; i < sampling.size(); ++i) {
    if (sampling[i] == 0.0) continue;
    const double likelihood = prior[i] * t.values[i] / t.logical;
    if (likelihood == 0.0) return {kl_info, std::numeric_limits<double>::infinity()};
    penalty += sampling[i] * std::log2(sampling[i] / likelihood);
  }
  return {kl_info, penalty};
}

double semantic_mutual_info(const Channel& channel, const Distribution& prior,
                            const std::vector<TruthFunction>& tfs) {
  if (tfs.size() != channel.hypothesis_count()) {
    throw Error(ErrorKind::IndexMismatch, "one truth function per hypothesis is required");
  }
  require_same_alphabet(channel.evidence(), prior.alphabet());
  double total = 0.0;
  for (std::size_t j = 0; j < tfs.size(); ++j) {
    const double pj = channel.selection_probability(j, prior);
    if (pj == 0.0) continue;
    const double info = average_semantic_info(tfs[j], prior, channel.posterior(j, prior));
    if (info == kNegInf) return kNegInf;
    total += pj * info;
  }
  return total;
}

}  // namespace semcal
