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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <vector>

#include "semcal/error.hpp"
#include "semcal/semantic_info.hpp"
#include "semcal/truth_functions.hpp"
#include "test_support.hpp"

namespace semcal {
namespace {

using testing::Gen;
using testing::kind_of;

const Alphabet kBinary({"e1", "e0"});

TruthFunction random_tabular(Gen& g, const Alphabet& a) {
  std::vector<double> v(a.size());
  for (auto& x : v) x = g.coin(0.1) ? (g.coin() ? 0.0 : 1.0) : g.uniform();
  return TruthFunction::tabular(a, v);
}

TEST(TruthFunction, GaussianPeaksAtCenter) {
  const auto tf = TruthFunction::gaussian(3.0, 2.0);
  EXPECT_DOUBLE_EQ(evaluate(tf, 3.0), 1.0);
  EXPECT_NEAR(evaluate(tf, 5.0), std::exp(-0.5), 1e-15);
  EXPECT_EQ(kind_of([] { TruthFunction::gaussian(0.0, 0.0); }), ErrorKind::DegenerateInput);
  EXPECT_EQ(kind_of([&] { tf(Evidence{"no-position", std::nullopt}); }), ErrorKind::UnknownLabel);
}

TEST(TruthFunction, BeliefAdjustedBranches) {
  const auto h1 = TruthFunction::crisp({"e1"});
  EXPECT_NEAR(evaluate(belief_adjust(h1, 0.908), kBinary, 1), 0.092, 1e-3);
  EXPECT_DOUBLE_EQ(evaluate(belief_adjust(h1, 0.908), kBinary, 0), 1.0);
  EXPECT_NEAR(evaluate(belief_adjust(h1, -0.808), kBinary, 0), 0.192, 1e-3);
  EXPECT_DOUBLE_EQ(evaluate(belief_adjust(h1, -0.808), kBinary, 1), 1.0);
}

TEST(TruthFunction, UnknownLabel) {
  const auto tf = TruthFunction::tabular({{"a", 0.5}});
  EXPECT_EQ(kind_of([&] { tf(Evidence{"b", std::nullopt}); }), ErrorKind::UnknownLabel);
}

TEST(BeliefAdjust, EndpointsAndRange) {
  Gen g(21);
  const Alphabet a = g.alphabet(5);
  const auto tf = random_tabular(g, a);
  const auto crisp = TruthFunction::crisp({"e2", "e4"});
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_DOUBLE_EQ(evaluate(belief_adjust(tf, 1.0), a, i), evaluate(tf, a, i));
    EXPECT_DOUBLE_EQ(evaluate(belief_adjust(tf, 0.0), a, i), 1.0);
    EXPECT_DOUBLE_EQ(evaluate(belief_adjust(crisp, -1.0), a, i), 1.0 - evaluate(crisp, a, i));
  }
  EXPECT_EQ(kind_of([&] { belief_adjust(tf, 1.5); }), ErrorKind::BeliefOutOfRange);
  EXPECT_EQ(kind_of([&] { belief_adjust(tf, -1.0001); }), ErrorKind::BeliefOutOfRange);
}

TEST(BeliefAdjust, ValuesStayInUnitInterval) {
  Gen g(22);
  const Alphabet a = g.alphabet(6);
  for (int k = 0; k < 200; ++k) {
    auto tf = random_tabular(g, a);
    for (int depth = 0; depth < 3; ++depth) tf = belief_adjust(g.coin() ? negate(tf) : tf, g.uniform(-1.0, 1.0));
    for (double v : truth_values(tf, a)) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(LogicalProbability, Examples) {
  const Distribution prior(kBinary, {0.8, 0.2});
  EXPECT_DOUBLE_EQ(logical_probability(TruthFunction::tautology(), prior), 1.0);
  EXPECT_DOUBLE_EQ(logical_probability(TruthFunction::crisp({"e1"}), prior), 0.8);
  const auto adjusted = belief_adjust(TruthFunction::crisp({"e1"}), 1.0 - 0.0404);
  EXPECT_NEAR(logical_probability(adjusted, prior), 0.0404 * 0.2 + 0.8, 1e-12);
  EXPECT_NEAR(logical_probability(adjusted, prior), 0.80808, 1e-5);
  const auto other = TruthFunction::tabular({{"x", 1.0}});
  EXPECT_EQ(kind_of([&] { logical_probability(other, prior); }), ErrorKind::UnknownLabel);
}

TEST(SemanticBayes, Examples) {
  const Distribution prior(kBinary, {0.1, 0.9});
  EXPECT_NEAR(semantic_bayes(prior, TruthFunction::tautology())[0], 0.1, 1e-15);
  EXPECT_NEAR(semantic_bayes(prior, belief_adjust(TruthFunction::crisp({"e1"}), 1.0 - 0.0011))[0], 0.991, 1e-3);

  const Distribution hiv(kBinary, {0.004, 0.996});
  const double b_prime = 0.001 / 0.917;
  const double oracle = 0.004 / (0.004 + b_prime * 0.996);
  const Distribution predicted = semantic_bayes(hiv, belief_adjust(TruthFunction::crisp({"e1"}), 1.0 - b_prime));
  EXPECT_NEAR(predicted[0], oracle, 1e-12);
  EXPECT_NEAR(predicted[0], 0.786, 2e-3);
  EXPECT_NEAR(predicted[0], bayes_invert(hiv, std::vector<double>{0.917, 0.001})[0], 1e-12);

  EXPECT_EQ(kind_of([&] { semantic_bayes(prior, TruthFunction::contradiction()); }),
            ErrorKind::ZeroLogicalProbability);
}

TEST(SemanticBayes, RoundTripRecoversTruthFunction) {
  Gen g(23);
  for (int k = 0; k < 200; ++k) {
    const Alphabet a = g.alphabet(static_cast<std::size_t>(g.integer(2, 7)));
    const Distribution prior = g.distribution(a);
    std::vector<double> t(a.size());
    for (auto& x : t) x = g.uniform(0.05, 1.0);
    t[static_cast<std::size_t>(g.integer(0, static_cast<int>(a.size()) - 1))] = 1.0;
    const auto tf = TruthFunction::tabular(a, t);
    const Distribution likelihood = semantic_bayes(prior, tf);
    const double logical = logical_probability(tf, prior);
    std::vector<double> back(a.size());
    double top = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      back[i] = logical * likelihood[i] / prior[i];
      top = std::max(top, back[i]);
    }
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(back[i] / top, t[i], 1e-12);
  }
}

TEST(Negate, Examples) {
  const auto n = negate(TruthFunction::tautology());
  ASSERT_EQ(n.kind(), TruthFunction::Kind::Constant);
  EXPECT_DOUBLE_EQ(n.constant_value(), 0.0);
  const auto flipped = negate(TruthFunction::crisp({"e1"}));
  EXPECT_EQ(truth_values(flipped, kBinary), truth_values(TruthFunction::crisp({"e0"}), kBinary));
}

TEST(Negate, ComplementAndInvolution) {
  Gen g(24);
  const Alphabet a = g.alphabet(5);
  for (int k = 0; k < 200; ++k) {
    auto tf = random_tabular(g, a);
    if (g.coin()) tf = belief_adjust(tf, g.uniform(-1.0, 1.0));
    const auto neg = negate(tf);
    const auto twice = negate(neg);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_DOUBLE_EQ(evaluate(neg, a, i), 1.0 - evaluate(tf, a, i));
      EXPECT_EQ(evaluate(twice, a, i), evaluate(tf, a, i));
    }
  }
}

TEST(NegationBelief, DenialWithOppositeBeliefEqualsAffirmation) {
  Gen g(25);
  const Alphabet a = g.alphabet(6);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto h1 = random_tabular(g, a);
    const auto h0 = negate(h1);
    for (int s = 0; s < 20; ++s) {
      const double b0 = g.uniform(0.0, 1.0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(evaluate(belief_adjust(h0, -b0), a, i) - evaluate(belief_adjust(h1, b0), a, i)));
        worst = std::max(worst, std::abs(evaluate(belief_adjust(h0, b0), a, i) - evaluate(belief_adjust(h1, -b0), a, i)));
      }
    }
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Gaussian, InformationIsSeverityMinusDeviation) {
  Gen g(26);
  for (int k = 0; k < 50; ++k) {
    const std::size_t m = static_cast<std::size_t>(g.integer(3, 30));
    std::vector<std::string> labels;
    std::vector<double> positions;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back("p" + std::to_string(i));
      positions.push_back(static_cast<double>(i) * 0.5);
    }
    const Alphabet a(labels, positions);
    const Distribution prior = g.distribution(a);
    const double center = g.uniform(0.0, positions.back());
    const double d = g.uniform(0.3, 4.0);
    const auto tf = TruthFunction::gaussian(center, d);
    const double logical = logical_probability(tf, prior);
    for (std::size_t i = 0; i < m; ++i) {
      const double x = positions[i] - center;
      const double expected = std::log2(1.0 / logical) - x * x / (2.0 * d * d) * std::log2(std::exp(1.0));
      EXPECT_NEAR(pointwise_semantic_info(tf, prior, i), expected, 1e-9);
    }
  }
}

TEST(TruthFunction, DescribeForms) {
  EXPECT_EQ(TruthFunction::tautology().describe(), "tautology");
  EXPECT_EQ(TruthFunction::contradiction().describe(), "contradiction");
  EXPECT_EQ(TruthFunction::crisp({"b", "a"}).describe(), "crisp:a|b");
}

}  // namespace
}  // namespace semcal
