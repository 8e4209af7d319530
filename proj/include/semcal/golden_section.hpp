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

#include <cmath>
#include <cstddef>
#include <functional>

namespace semcal {

struct ScalarOptimum {
  double x;
  double value;
};

/// Maximizes a unimodal f on [lo, hi] by golden-section search until the
/// bracket is narrower than tolerance. -inf values are ordinary (very low)
/// objective values.
ScalarOptimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance = 1e-10, std::size_t max_iterations = 200);

/// Coarse scan over `intervals` equal steps to bracket the best point, then
/// golden-section refinement inside the bracket. Guards against shallow
/// secondary maxima that would mislead a bare golden-section search.
ScalarOptimum bracketed_maximize(const std::function<double(double)>& f, double lo, double hi,
                                 std::size_t intervals = 64, double tolerance = 1e-10);

}  // namespace semcal
