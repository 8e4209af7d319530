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
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "semcal/confirmation.hpp"

namespace semcal {

using Rational = boost::rational<std::int64_t>;

/// DOC of a crisp GPS reading whose true position falls inside a circle of
/// n cells with probability f, out of N cells overall:
/// p1 = f/n, p0 = (1-f)/(N-n), b'* = p0/p1. Throws DegenerateGeometry.
DocResult gps_cep_doc(double cep_fraction, std::int64_t in_circle_cells, std::int64_t total_cells);

/// Same degree of belief computed in exact rational arithmetic.
Rational gps_cep_belief_exact(Rational cep_fraction, std::int64_t in_circle_cells, std::int64_t total_cells);

/// Deviation model on a 1-D ring of `cells` positions `step` apart:
///   P(reported | true) = k exp(-|reported - delta_e - true|^2 / (2 d^2)) + c
/// with k chosen so that each row sums to 1. Distances wrap around the ring.
struct GpsModel {
  double delta_e = 0.0;
  double d = 1.0;
  double c = 0.0;
  std::size_t cells = 0;
  double step = 1.0;

  /// Throws DegenerateGeometry or GridTooCoarse (d below two grid steps).
  void validate() const;
  /// k, the peak coefficient that normalizes each row.
  double peak_coefficient() const;
  /// 1 - c/(k + c), the degree of belief the floor c leaves.
  double expected_belief() const;
};

/// Joint distribution P(true = e_i, reported = e_j) on a ring of cells.
struct GpsObservation {
  std::size_t cells = 0;
  double step = 1.0;
  std::vector<double> joint;  ///< row-major, joint[i * cells + j]

  double at(std::size_t true_cell, std::size_t reported_cell) const { return joint[true_cell * cells + reported_cell]; }

  /// Uniform true position, reported position drawn from the model.
  static GpsObservation from_model(const GpsModel& model);
  /// Empirical joint from (true cell, reported cell) pairs.
  static GpsObservation from_pairs(std::size_t cells, double step,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  /// Cyclic shift of every position by `cells_shift` cells.
  GpsObservation translated(std::size_t cells_shift) const;
};

/// Semantic mutual information of the readings under the belief-adjusted
/// Gaussian truth functions T(h_j|E) = b exp(-|e_j - delta_e - E|^2/(2 d^2)) + 1 - b.
double gps_objective(const GpsObservation& obs, double delta_e, double d, double b);

struct GpsFit {
  double delta_e;
  double d;
  double b;
  double information_bits;
};

/// Maximizes gps_objective over (delta_e, d, b) by coordinate search seeded
/// from the deviation histogram. Throws GridTooCoarse when the fitted d is
/// below two grid steps.
GpsFit gps_fit(const GpsObservation& obs);

}  // namespace semcal
