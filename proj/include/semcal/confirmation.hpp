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

#include <string_view>

#include "semcal/distributions.hpp"

namespace semcal {

/// Which sign cell of the four-way classification a degree of confirmation
/// falls in. Affirmations are hypotheses predicting e1, negations predict e0.
enum class DocCase { ProperAffirmation, ExcessiveAffirmation, ProperNegation, ExcessiveNegation };

std::string_view to_string(DocCase c) noexcept;

/// Whether the hypothesis asserts the positive outcome e1 or denies it.
enum class Polarity { Affirmative, Denial };

struct DocResult {
  double b_star;        ///< optimized degree of belief in [-1, 1]
  double b_prime_star;  ///< optimized degree of disbelief, 1 - |b_star|
  DocCase doc_case;
  double information_bits;  ///< average semantic information at b_star
};

/// 2x2 counts. e_11: in S1 and S2; e_10: in S1, not S2; e_01: not S1, in
/// S2; e_00: neither. Counts are real-valued so that they can be
/// differentiated.
struct ContingencyTable {
  double n11 = 0;
  double n10 = 0;
  double n01 = 0;
  double n00 = 0;

  double total() const noexcept { return n11 + n10 + n01 + n00; }
  /// Throws NegativeMass for a negative or non-finite count, DegenerateInput for an all-zero table.
  void validate() const;
};

/// Prior (P0, P1) = (P(e0), P(e1)) and posterior (Q0, Q1) = (P(e0|h), P(e1|h)).
struct RateSpec {
  double p0 = 0;
  double p1 = 0;
  double q0 = 0;
  double q1 = 0;

  /// Throws NegativeMass or NotNormalized.
  void validate(double tolerance = kNormalizationTolerance) const;
};

/// Rates for h1 = "if in S1 then in S2": the prior is the S2 marginal, the
/// posterior is the S1 row.
RateSpec rates_from_table(const ContingencyTable& t);

/// Closed-form optimum of the average semantic information over the degree
/// of belief of a crisp hypothesis. When the counterexample ratio Q0/Q1 does
/// not exceed P0/P1, b'* = (Q0/Q1)/(P0/P1) and b* = 1 - b'*; otherwise
/// b'* = (P0/P1)/(Q0/Q1) and b* = b'* - 1. For Polarity::Denial the roles
/// of e0 and e1 are exchanged.
///
/// Throws DegenerateRates when the posterior puts mass on a letter the prior
/// excludes. If the letters are equally rare before and after (including the
/// case where one letter has no mass at all) the result is b* = 0.
DocResult doc_from_rates(const RateSpec& spec, Polarity polarity = Polarity::Affirmative);

/// DOC of h1 = s1 -> s2, b'* = [n10/(n00+n10)] / [n11/(n01+n11)].
/// Throws EmptyRow when n11 + n10 = 0, EmptyColumn when a column is empty.
DocResult doc_h1_from_table(const ContingencyTable& t);

/// DOC of the contrapositive h2 = not s2 -> not s1,
/// b2'* = [n10/(n11+n10)] / [n00/(n01+n00)].
DocResult doc_h2_from_table(const ContingencyTable& t);

struct TestDoc {
  DocResult positive;  ///< result "+" read as "infected"
  DocResult negative;  ///< result "-" read as "not infected"
};

/// DOC of both results of a binary test: b+* = 1 - (1 - specificity)/sensitivity
/// and b-* = 1 - (1 - sensitivity)/specificity, switching to the negative
/// branch when the ratio exceeds 1. The degrees do not depend on the prior;
/// the information fields are evaluated at P(e1) = prior_e1.
/// Throws ZeroSensitivity when sensitivity is 0.
TestDoc doc_from_test(double sensitivity, double specificity, double prior_e1 = 0.5);

/// P(e1 | h1 with b'*) = P(e1) / (P(e1) + b'* P(e0)).
double predicted_probability(double p_e1, double b_prime_star);

struct RavenIncrements {
  double d_b1_d_n11;
  double d_b1_d_n00;
};

/// Partial derivatives of b1* = 1 - b1'* with respect to n11 and n00, valid
/// where b1'* <= 1 (the positive branch).
/// Throws EmptyRow when n11 = 0 or n00 + n10 = 0.
RavenIncrements raven_increments(const ContingencyTable& t);

}  // namespace semcal
