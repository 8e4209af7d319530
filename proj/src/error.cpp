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

#include "semcal/error.hpp"

namespace semcal {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::BeliefOutOfRange: return "BeliefOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroPrior: return "ZeroPrior";
    case ErrorKind::AbsoluteContinuityViolated: return "AbsoluteContinuityViolated";
    case ErrorKind::ZeroSelectionMass: return "ZeroSelectionMass";
    case ErrorKind::ZeroLogicalProbability: return "ZeroLogicalProbability";
    case ErrorKind::DegenerateRates: return "DegenerateRates";
    case ErrorKind::EmptyRow: return "EmptyRow";
    case ErrorKind::EmptyColumn: return "EmptyColumn";
    case ErrorKind::ZeroSensitivity: return "ZeroSensitivity";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::EmptyConditionSubset: return "EmptyConditionSubset";
    case ErrorKind::ZeroRow: return "ZeroRow";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
  }
  return "Unknown";
}

bool is_degeneracy(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidAlphabet:
    case ErrorKind::NotNormalized:
    case ErrorKind::NegativeMass:
    case ErrorKind::AlphabetMismatch:
    case ErrorKind::UnknownLabel:
    case ErrorKind::IndexMismatch:
    case ErrorKind::BeliefOutOfRange:
    case ErrorKind::ParseError:
      return false;
    default:
      return true;
  }
}

}  // namespace semcal
