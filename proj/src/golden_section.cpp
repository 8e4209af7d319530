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

#include "semcal/golden_section.hpp"

#include <algorithm>

namespace semcal {

ScalarOptimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance, std::size_t max_iterations) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (std::size_t it = 0; it < max_iterations && (b - a) > tolerance; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // The end points are candidates too: the maximum may sit on the boundary.
  ScalarOptimum best{c, fc};
  for (double x : {d, a, b}) {
    const double fx = (x == d) ? fd : f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

ScalarOptimum bracketed_maximize(const std::function<double(double)>& f, double lo, double hi,
                                 std::size_t intervals, double tolerance) {
  intervals = std::max<std::size_t>(intervals, 2);
  const double step = (hi - lo) / static_cast<double>(intervals);
  std::size_t best_k = 0;
  double best_v = f(lo);
  for (std::size_t k = 1; k <= intervals; ++k) {
    const double x = (k == intervals) ? hi : lo + step * static_cast<double>(k);
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_k = k;
    }
  }
  const double a = best_k == 0 ? lo : lo + step * static_cast<double>(best_k - 1);
  const double b = best_k == intervals ? hi : lo + step * static_cast<double>(best_k + 1);
  ScalarOptimum refined = golden_section_maximize(f, a, b, tolerance);
  const double grid_x = best_k == intervals ? hi : lo + step * static_cast<double>(best_k);
  if (best_v > refined.value) return {grid_x, best_v};
  return refined;
}

}  // namespace semcal
