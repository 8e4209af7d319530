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

#include <algorithm>
#include <cmath>
#include <vector>

#include "semcal/error.hpp"
#include "semcal/estimation.hpp"
#include "semcal/golden_section.hpp"
#include "semcal/semantic_info.hpp"
#include "test_support.hpp"

namespace semcal {
namespace {

using testing::Gen;
using testing::kind_of;

const Alphabet kBinary({"e1", "e0"});

std::vector<Sample> repeat(const std::string& condition, const std::string& label, int n) {
  return std::vector<Sample>(static_cast<std::size_t>(n), Sample{condition, label});
}

std::vector<Sample> birds() {
  std::vector<Sample> s;
  for (auto part : {repeat("s1", "e1", 83), repeat("s1", "e0", 57), repeat("not-s1", "e1", 17),
                    repeat("not-s1", "e0", 686)}) {
    s.insert(s.end(), part.begin(), part.end());
  }
  return s;
}

TEST(GoldenSection, FindsInteriorAndEndpointMaxima) {
  const auto parabola = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -1.0, 1.0);
  EXPECT_NEAR(parabola.x, 0.3, 1e-8);
  const auto rising = golden_section_maximize([](double x) { return x; }, 0.0, 2.0);
  EXPECT_DOUBLE_EQ(rising.x, 2.0);
  // A shallow bump far from the true peak misleads a bare search but not the bracketed one.
  auto two_peaks = [](double x) { return std::exp(-200 * (x - 0.05) * (x - 0.05)) + 0.9 * std::exp(-5 * (x - 0.8) * (x - 0.8)); };
  double dense = 0.0;
  for (int k = 0; k <= 100000; ++k) dense = std::max(dense, two_peaks(k * 1e-5));
  const auto found = bracketed_maximize(two_peaks, 0.0, 1.0);
  EXPECT_LT(found.x, 0.1);
  EXPECT_GE(found.value, dense - 1e-12);
}

TEST(EmpiricalConditional, Examples) {
  const SampleSet samples(birds());
  const Distribution s1 = empirical_conditional(samples, {"s1"});
  EXPECT_NEAR(s1.at("e1"), 0.5929, 1e-4);
  EXPECT_NEAR(s1.at("e0"), 0.4071, 1e-4);
  const Distribution both = empirical_conditional(samples, {"s1", "not-s1"});
  EXPECT_NEAR(both.at("e1"), 100.0 / 843.0, 1e-15);

  const SampleSet one(kBinary, {{"z", "e1"}});
  EXPECT_DOUBLE_EQ(empirical_conditional(one, {"z"}).at("e1"), 1.0);
  const SampleSet same(kBinary, repeat("z", "e0", 9));
  EXPECT_DOUBLE_EQ(empirical_conditional(same, {"z"}).at("e0"), 1.0);

  EXPECT_EQ(kind_of([&] { empirical_conditional(samples, {"missing"}); }), ErrorKind::EmptyConditionSubset);
  EXPECT_EQ(kind_of([] { SampleSet(kBinary, {{"z", "e7"}}); }), ErrorKind::UnknownLabel);
}

TEST(OptimalTruthFunction, Examples) {
  const Channel birds_channel(kBinary, {"h1", "h0"}, {{0.830, 0.0767}, {0.170, 0.9233}});
  const Distribution prior(kBinary, {100.0 / 843.0, 743.0 / 843.0});
  const auto t = optimal_truth_function(birds_channel, 0, prior);
  EXPECT_DOUBLE_EQ(evaluate(t, kBinary, 0), 1.0);
  EXPECT_NEAR(evaluate(t, kBinary, 1), 0.0924, 1e-4);

  const Alphabet a({"a", "b", "c"});
  const Distribution pa(a, {0.2, 0.3, 0.5});
  const Channel ch(a, {"flat", "onehot", "rest"}, {{0.5, 0.5, 0.5}, {0.0, 0.5, 0.0}, {0.5, 0.0, 0.5}});
  EXPECT_EQ(optimal_truth_function(ch, 0, pa).kind(), TruthFunction::Kind::Constant);
  const auto one = optimal_truth_function(ch, 1, pa);
  ASSERT_EQ(one.kind(), TruthFunction::Kind::Crisp);
  EXPECT_EQ(one.crisp_set(), std::set<std::string>{"b"});

  const Channel zero(a, {"none", "all"}, {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}});
  EXPECT_EQ(kind_of([&] { optimal_truth_function(zero, 0, pa); }), ErrorKind::ZeroRow);
}

TEST(OptimalTruthFunction, BeatsEveryGridTruthFunction) {
  Gen g(51);
  const Alphabet a = g.alphabet(3);
  const int steps = 20;
  for (int k = 0; k < 20; ++k) {
    const Distribution prior = g.distribution(a);
    std::vector<std::vector<double>> rows(3, std::vector<double>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      const auto col = g.simplex(3, 0.02);
      for (std::size_t j = 0; j < 3; ++j) rows[j][i] = col[j];
    }
    const Channel ch(a, {"h1", "h2", "h3"}, rows);
    for (std::size_t j = 0; j < 3; ++j) {
      const Distribution sampling = ch.posterior(j, prior);
      const double opt = average_semantic_info(optimal_truth_function(ch, j, prior), prior, sampling);
      double grid = kNegInf;
      for (int x = 0; x <= steps; ++x) {
        for (int y = 0; y <= steps; ++y) {
          for (int z = 0; z <= steps; ++z) {
            const std::vector<double> t{x / double(steps), y / double(steps), z / double(steps)};
            if (std::max({x, y, z}) != steps) continue;  // max 1
            grid = std::max(grid, average_semantic_info(TruthFunction::tabular(a, t), prior, sampling));
          }
        }
      }
      EXPECT_GE(opt, grid - 1e-12);
      EXPECT_LE(opt - grid, 5e-3);
    }
  }
}

TEST(OptimizeBelief, MatchesClosedFormOnCrispHypotheses) {
  const Distribution prior(kBinary, {0.8, 0.2});
  const Distribution sampling(kBinary, {0.75, 0.25});
  const DocResult numeric = optimize_belief(TruthFunction::crisp({"e1"}), prior, sampling);
  const DocResult closed = doc_from_rates({0.2, 0.8, 0.25, 0.75});
  EXPECT_LT(numeric.b_star, 0.0);
  EXPECT_NEAR(numeric.b_star, closed.b_star, 1e-6);
  EXPECT_NEAR(numeric.information_bits, closed.information_bits, 1e-9);
  EXPECT_EQ(numeric.doc_case, DocCase::ExcessiveAffirmation);

  Gen g(52);
  for (int k = 0; k < 300; ++k) {
    const double p1 = g.uniform(0.02, 0.98);
    const double q1 = g.uniform(0.02, 0.98);
    const DocResult c = doc_from_rates({1 - p1, p1, 1 - q1, q1});
    const DocResult n = optimize_belief(TruthFunction::crisp({"e1"}), Distribution(kBinary, {p1, 1 - p1}),
                                        Distribution(kBinary, {q1, 1 - q1}));
    EXPECT_NEAR(n.b_star, c.b_star, 1e-6);
  }
}

TEST(OptimizeBelief, TautologyAndAlreadyOptimalBase) {
  Gen g(53);
  const Alphabet a = g.alphabet(4);
  const Distribution prior = g.distribution(a);
  const Distribution sampling = g.distribution(a);
  const DocResult taut = optimize_belief(TruthFunction::tautology(), prior, sampling);
  EXPECT_DOUBLE_EQ(taut.b_star, 0.0);
  EXPECT_DOUBLE_EQ(taut.information_bits, 0.0);

  for (int k = 0; k < 50; ++k) {
    std::vector<double> t(a.size());
    for (auto& x : t) x = g.uniform(0.05, 1.0);
    t[0] = 1.0;
    const auto base = TruthFunction::tabular(a, t);
    const Distribution p = g.distribution(a);
    const DocResult d = optimize_belief(base, p, semantic_bayes(p, base));
    EXPECT_NEAR(d.b_star, 1.0, 1e-6);
  }
  EXPECT_EQ(kind_of([&] { optimize_belief(TruthFunction::contradiction(), prior, sampling); }),
            ErrorKind::DegenerateInput);
}

TEST(OptimizeBelief, NeverWorseThanTautology) {
  Gen g(54);
  for (int k = 0; k < 300; ++k) {
    const Alphabet a = g.alphabet(static_cast<std::size_t>(g.integer(2, 6)));
    std::vector<double> t(a.size());
    for (auto& x : t) x = g.coin(0.3) ? 0.0 : g.uniform();
    t[0] = std::max(t[0], 0.1);
    const DocResult d = optimize_belief(TruthFunction::tabular(a, t), g.distribution(a), g.distribution(a, 0.0));
    EXPECT_GE(d.information_bits, 0.0);
  }
}

TEST(Msie, BirdsReproduceTheTable) {
  const auto fits = msie(SampleSet(birds()));
  ASSERT_EQ(fits.size(), 2u);
  const auto& s1 = fits[0];
  EXPECT_EQ(s1.condition, "s1");
  EXPECT_NEAR(s1.selection_probability, 140.0 / 843.0, 1e-15);
  EXPECT_DOUBLE_EQ(s1.truth_values[0], 1.0);
  EXPECT_NEAR(s1.truth_values[1], 0.0924, 5e-4);
  EXPECT_NEAR(s1.doc.b_star, 0.908, 5e-4);
  EXPECT_NEAR(s1.information_bits, doc_h1_from_table({83, 57, 17, 686}).information_bits, 1e-9);
  EXPECT_NEAR(s1.doc.information_bits, s1.information_bits, 1e-9);
}

TEST(Msie, UniformSingleConditionIsTautology) {
  std::vector<Sample> s;
  for (const char* l : {"a", "b", "c", "d"}) {
    auto part = repeat("only", l, 5);
    s.insert(s.end(), part.begin(), part.end());
  }
  const auto fits = msie(SampleSet(s));
  ASSERT_EQ(fits.size(), 1u);
  EXPECT_EQ(fits[0].truth.kind(), TruthFunction::Kind::Constant);
  EXPECT_DOUBLE_EQ(fits[0].doc.b_star, 0.0);
  EXPECT_DOUBLE_EQ(fits[0].information_bits, 0.0);
}

TEST(Msie, LikelihoodOfFittedTruthIsTheEmpiricalConditional) {
  Gen g(55);
  for (int k = 0; k < 50; ++k) {
    const Alphabet a = g.alphabet(static_cast<std::size_t>(g.integer(2, 6)));
    const Distribution prior = g.distribution(a, 0.05);
    std::vector<Sample> s;
    for (int r = 0; r < 400; ++r) {
      s.push_back({"c" + std::to_string(g.integer(1, 3)), a.label(static_cast<std::size_t>(g.integer(0, static_cast<int>(a.size()) - 1)))});
    }
    const SampleSet samples(a, s);
    for (const auto& h : msie(samples, prior)) {
      const Distribution likelihood = semantic_bayes(prior, h.truth);
      const Distribution empirical = empirical_conditional(samples, {h.condition});
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(likelihood[i], empirical[i], 1e-6);
      EXPECT_NEAR(h.information_bits, kl_divergence(empirical, prior), 1e-9);
    }
  }
}

TEST(Msie, SampledLabelWithoutPriorMass) {
  const Distribution prior(kBinary, {1.0, 0.0});
  const SampleSet samples(kBinary, {{"z", "e0"}});
  EXPECT_EQ(kind_of([&] { msie(samples, prior); }), ErrorKind::AbsoluteContinuityViolated);
}

}  // namespace
}  // namespace semcal
