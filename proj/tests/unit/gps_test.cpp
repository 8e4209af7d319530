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
#include <random>
#include <vector>

#include "semcal/error.hpp"
#include "semcal/gps.hpp"
#include "semcal/semantic_info.hpp"
#include "test_support.hpp"

namespace semcal {
namespace {

using testing::kind_of;

TEST(GpsCep, Examples) {
  EXPECT_EQ(gps_cep_belief_exact(Rational(1, 2), 3, 3000), Rational(998, 999));
  EXPECT_EQ(gps_cep_belief_exact(Rational(1, 2), 5, 10), Rational(0));
  EXPECT_EQ(gps_cep_belief_exact(Rational(9, 10), 1, 10), Rational(80, 81));
  EXPECT_NEAR(gps_cep_doc(0.9, 1, 10).b_prime_star, 1.0 / 81.0, 1e-15);
  EXPECT_NEAR(gps_cep_doc(0.5, 4, 8).b_star, 0.0, 1e-15);
  EXPECT_NEAR(gps_cep_doc(0.5, 7, 7000).b_star, 998.0 / 999.0, 1e-12);
  EXPECT_EQ(kind_of([] { gps_cep_doc(0.5, 10, 10); }), ErrorKind::DegenerateGeometry);
  EXPECT_EQ(kind_of([] { gps_cep_belief_exact(Rational(1, 2), 0, 10); }), ErrorKind::DegenerateGeometry);
}

TEST(GpsModel, RowsNormalizeAndBeliefFollowsTheFloor) {
  const GpsModel m{1.5, 4.0, 1e-4, 120, 1.0};
  const GpsObservation obs = GpsObservation::from_model(m);
  for (std::size_t i = 0; i < m.cells; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cells; ++j) row += obs.at(i, j);
    EXPECT_NEAR(row * static_cast<double>(m.cells), 1.0, 1e-9);
  }
  EXPECT_DOUBLE_EQ(GpsModel({0.0, 4.0, 0.0, 120, 1.0}).expected_belief(), 1.0);
  EXPECT_EQ(kind_of([] { GpsModel({0.0, 1.5, 0.0, 120, 1.0}).validate(); }), ErrorKind::GridTooCoarse);
  EXPECT_EQ(kind_of([] { GpsModel({0.0, 4.0, 0.01, 120, 1.0}).validate(); }), ErrorKind::DegenerateGeometry);
}

TEST(GpsObjective, EqualsSemanticMutualInformation) {
  const GpsModel m{2.0, 2.5, 2e-3, 24, 1.0};
  const GpsObservation obs = GpsObservation::from_model(m);
  const std::size_t n = m.cells;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  const Alphabet a(labels);
  std::vector<double> p_true(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p_true[i] += obs.at(i, j);
  }
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) rows[j][i] = obs.at(i, j) / p_true[i];
  }
  const Channel channel(a, labels, rows);
  const Distribution prior(a, p_true);
  for (double b : {0.3, 0.8, 0.999}) {
    for (double delta : {0.0, 2.0, -1.3}) {
      const double d = 2.7;
      std::vector<TruthFunction> tfs;
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> t(n);
        for (std::size_t i = 0; i < n; ++i) {
          // Ring distance between reported j shifted back by delta and true i.
          double x = std::fmod(static_cast<double>(j) - delta - static_cast<double>(i) + 1.5 * n, double(n)) - 0.5 * n;
          t[i] = b * std::exp(-x * x / (2 * d * d)) + 1 - b;
        }
        tfs.push_back(TruthFunction::tabular(a, t));
      }
      EXPECT_NEAR(gps_objective(obs, delta, d, b), semantic_mutual_info(channel, prior, tfs), 1e-9);
    }
  }
}

TEST(GpsObjective, InvariantUnderTranslation) {
  const GpsObservation obs = GpsObservation::from_model({3.0, 4.0, 5e-4, 200, 1.0});
  for (std::size_t shift : {1u, 17u, 199u}) {
    const GpsObservation moved = obs.translated(shift);
    for (double b : {0.5, 0.95}) {
      EXPECT_NEAR(gps_objective(obs, 3.0, 4.2, b), gps_objective(moved, 3.0, 4.2, b), 1e-9);
    }
  }
}

TEST(GpsFit, RecoversModelParameters) {
  for (const GpsModel& m : {GpsModel{0.0, 5.0, 0.0, 200, 1.0}, GpsModel{3.0, 5.0, 2e-3, 200, 1.0},
                            GpsModel{-7.0, 8.0, 1e-3, 240, 0.5}}) {
    const GpsFit fit = gps_fit(GpsObservation::from_model(m));
    EXPECT_NEAR(fit.delta_e, m.delta_e, m.step);
    EXPECT_NEAR(fit.d, m.d, 0.05 * m.d);
    EXPECT_NEAR(fit.b, m.expected_belief(), 0.02);
  }
}

TEST(GpsFit, FloorEqualToPeakHalvesBelief) {
  GpsModel m{0.0, 5.0, 0.0, 200, 1.0};
  // c = k means (1 - n c) / mass = c.
  double mass = 0.0;
  for (int k = -100; k < 100; ++k) mass += std::exp(-0.5 * (k / 5.0) * (k / 5.0));
  m.c = 1.0 / (200.0 + mass);
  EXPECT_NEAR(m.peak_coefficient(), m.c, 1e-12);
  EXPECT_NEAR(gps_fit(GpsObservation::from_model(m)).b, 0.5, 0.02);
}

TEST(GpsFit, FromSampledPairs) {
  std::mt19937_64 rng(7);
  const std::size_t n = 200;
  std::normal_distribution<double> noise(4.0, 6.0);
  std::uniform_int_distribution<std::size_t> cell(0, n - 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (int k = 0; k < 200000; ++k) {
    const std::size_t t = cell(rng);
    const long r = std::lround(static_cast<double>(t) + noise(rng));
    pairs.emplace_back(t, static_cast<std::size_t>((r % long(n) + long(n)) % long(n)));
  }
  const GpsFit fit = gps_fit(GpsObservation::from_pairs(n, 1.0, pairs));
  EXPECT_NEAR(fit.delta_e, 4.0, 1.0);
  EXPECT_NEAR(fit.d, 6.0, 0.3);
  EXPECT_GT(fit.b, 0.95);
}

TEST(GpsFit, RejectsCoarseGrids) {
  const GpsObservation obs = GpsObservation::from_model({0.0, 2.0, 0.0, 100, 1.0});
  GpsObservation sharp = obs;
  std::fill(sharp.joint.begin(), sharp.joint.end(), 0.0);
  for (std::size_t i = 0; i < sharp.cells; ++i) sharp.joint[i * sharp.cells + i] = 1.0 / sharp.cells;
  EXPECT_EQ(kind_of([&] { gps_fit(sharp); }), ErrorKind::GridTooCoarse);
}

}  // namespace
}  // namespace semcal
