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

#include "semcal/gps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semcal/error.hpp"
#include "semcal/golden_section.hpp"

namespace semcal {

namespace {

// Signed distance on a ring of circumference `length`, in [-length/2, length/2).
double wrap(double x, double length) {
  double r = std::fmod(x + 0.5 * length, length);
  if (r < 0.0) r += length;
  return r - 0.5 * length;
}

// g[k] = exp(-wrap(k*step + delta)^2 / (2 d^2)), k = (true - reported) mod N.
std::vector<double> kernel(std::size_t cells, double step, double delta, double d) {
  const double length = static_cast<double>(cells) * step;
  std::vector<double> g(cells);
  for (std::size_t k = 0; k < cells; ++k) {
    const double z = wrap(static_cast<double>(k) * step + delta, length) / d;
    g[k] = std::exp(-0.5 * z * z);
  }
  return g;
}

void check_geometry(std::int64_t n, std::int64_t total) {
  if (n <= 0 || total <= n) {
    throw Error(ErrorKind::DegenerateGeometry, "need 0 < in-circle cells < total cells");
  }
}

}  // namespace

DocResult gps_cep_doc(double cep_fraction, std::int64_t n, std::int64_t total) {
  check_geometry(n, total);
  if (!(cep_fraction > 0.0 && cep_fraction < 1.0)) {
    throw Error(ErrorKind::DegenerateGeometry, "CEP fraction must lie strictly between 0 and 1");
  }
  const double p1 = static_cast<double>(n) / static_cast<double>(total);
  return doc_from_rates({1.0 - p1, p1, 1.0 - cep_fraction, cep_fraction});
}

Rational gps_cep_belief_exact(Rational f, std::int64_t n, std::int64_t total) {
  check_geometry(n, total);
  if (!(f > 0 && f < 1)) throw Error(ErrorKind::DegenerateGeometry, "CEP fraction must lie strictly between 0 and 1");
  const Rational p1 = f / n;
  const Rational p0 = (1 - f) / (total - n);
  if (p0 <= p1) return 1 - p0 / p1;
  return p1 / p0 - 1;
}

void GpsModel::validate() const {
  if (cells < 2 || !(step > 0.0)) throw Error(ErrorKind::DegenerateGeometry, "need at least 2 cells and step > 0");
  if (!(d > 0.0)) throw Error(ErrorKind::DegenerateGeometry, "d must be positive");
  if (!(c >= 0.0)) throw Error(ErrorKind::DegenerateGeometry, "c must be non-negative");
  if (!(static_cast<double>(cells) * c < 1.0)) {
    throw Error(ErrorKind::DegenerateGeometry, "floor c leaves no mass for the peak (cells * c >= 1)");
  }
  if (d < 2.0 * step) throw Error(ErrorKind::GridTooCoarse, "d must span at least two grid steps");
}

double GpsModel::peak_coefficient() const {
  validate();
  const auto g = kernel(cells, step, delta_e, d);
  double mass = 0.0;
  for (double v : g) mass += v;
  return (1.0 - static_cast<double>(cells) * c) / mass;
}

double GpsModel::expected_belief() const {
  const double k = peak_coefficient();
  return 1.0 - c / (k + c);
}

GpsObservation GpsObservation::from_model(const GpsModel& model) {
  const double k = model.peak_coefficient();
  const std::size_t n = model.cells;
  // Row for true cell i at reported cell j depends on (i - j) mod n.
  const auto g = kernel(n, model.step, model.delta_e, model.d);
  GpsObservation obs{n, model.step, std::vector<double>(n * n)};
  const double p_true = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) obs.joint[i * n + j] = p_true * (k * g[(i + n - j) % n] + model.c);
  }
  return obs;
}

GpsObservation GpsObservation::from_pairs(std::size_t cells, double step,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (cells < 2 || !(step > 0.0)) throw Error(ErrorKind::DegenerateGeometry, "need at least 2 cells and step > 0");
  if (pairs.empty()) throw Error(ErrorKind::EmptyConditionSubset, "no GPS records");
  GpsObservation obs{cells, step, std::vector<double>(cells * cells, 0.0)};
  const double w = 1.0 / static_cast<double>(pairs.size());
  for (const auto& [t, r] : pairs) {
    if (t >= cells || r >= cells) throw Error(ErrorKind::UnknownLabel, "GPS cell index outside the grid");
    obs.joint[t * cells + r] += w;
  }
  return obs;
}

GpsObservation GpsObservation::translated(std::size_t shift) const {
  GpsObservation out{cells, step, std::vector<double>(joint.size())};
  for (std::size_t i = 0; i < cells; ++i) {
    for (std::size_t j = 0; j < cells; ++j) out.joint[((i + shift) % cells) * cells + (j + shift) % cells] = at(i, j);
  }
  return out;
}

double gps_objective(const GpsObservation& obs, double delta_e, double d, double b) {
  const std::size_t n = obs.cells;
  if (!(d > 0.0)) return -std::numeric_limits<double>::infinity();
  const auto g = kernel(n, obs.step, delta_e, d);

  // T_j(e_i) takes only n distinct values, indexed by (i - j) mod n.
  std::vector<double> truth(n);
  std::vector<double> log_truth(n);
  for (std::size_t k = 0; k < n; ++k) {
    truth[k] = std::clamp(b * g[k] + 1.0 - b, 0.0, 1.0);
    log_truth[k] = std::log2(truth[k]);
  }
  std::vector<double> p_true(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p_true[i] += obs.at(i, j);
  }

  double info = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double p_reported = 0.0;
    double logical = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = (i + n - j) % n;
      const double w = obs.at(i, j);
      logical += p_true[i] * truth[k];
      if (w > 0.0) {
        if (truth[k] == 0.0) return -std::numeric_limits<double>::infinity();
        weighted += w * log_truth[k];
        p_reported += w;
      }
    }
    if (p_reported > 0.0) info += weighted - p_reported * std::log2(logical);
  }
  return info;
}

GpsFit gps_fit(const GpsObservation& obs) {
  const std::size_t n = obs.cells;
  if (n < 4 || obs.joint.size() != n * n) throw Error(ErrorKind::DegenerateGeometry, "observation grid is malformed");
  const double length = static_cast<double>(n) * obs.step;

  // Deviation histogram h[s] = P(reported - true = s cells).
  std::vector<double> h(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[(j + n - i) % n] += obs.at(i, j);
  }
  const auto peak_it = std::max_element(h.begin(), h.end());
  const double peak = *peak_it;
  const double floor = *std::min_element(h.begin(), h.end());
  const auto peak_shift = static_cast<double>(peak_it - h.begin());
  double delta = wrap(peak_shift * obs.step, length);
  double b = peak > 0.0 ? 1.0 - floor / peak : 0.0;
  double d = 0.0;
  {
    // Spread of the excess over the floor around the peak.
    double mass = 0.0;
    double second = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const double x = wrap(static_cast<double>(s) * obs.step - delta, length);
      const double excess = h[s] - floor;
      mass += excess;
      second += excess * x * x;
    }
    d = mass > 0.0 ? std::sqrt(second / mass) : obs.step * 2.0;
  }
  const double d_lo = 0.5 * obs.step;
  const double d_hi = 0.25 * length;
  d = std::clamp(d, d_lo, d_hi);

  double value = gps_objective(obs, delta, d, b);
  for (int sweep = 0; sweep < 60; ++sweep) {
    const double before_delta = delta, before_d = d, before_b = b;
    auto fd = [&](double x) { return gps_objective(obs, delta, x, b); };
    d = golden_section_maximize(fd, std::max(d_lo, 0.5 * d), std::min(d_hi, 2.0 * d), 1e-9).x;
    auto fdelta = [&](double x) { return gps_objective(obs, x, d, b); };
    delta = golden_section_maximize(fdelta, delta - 2.0 * obs.step, delta + 2.0 * obs.step, 1e-9).x;
    auto fb = [&](double x) { return gps_objective(obs, delta, d, x); };
    b = golden_section_maximize(fb, 0.0, 1.0, 1e-10).x;
    value = gps_objective(obs, delta, d, b);
    const double change = std::abs(delta - before_delta) + std::abs(d - before_d) + std::abs(b - before_b);
    if (change < 1e-8) break;
  }
  if (d < 2.0 * obs.step) throw Error(ErrorKind::GridTooCoarse, "fitted d is below two grid steps");
  return {wrap(delta, length), d, b, value};
}

}  // namespace semcal
