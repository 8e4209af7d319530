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

#include "semcal/confirmation.hpp"

#include <cmath>

#include "semcal/error.hpp"
#include "semcal/numfmt.hpp"
#include "semcal/semantic_info.hpp"
#include "semcal/truth_functions.hpp"

namespace semcal {

namespace {

const Alphabet& binary_alphabet() {
  static const Alphabet alphabet({"e1", "e0"});
  return alphabet;
}

struct Belief {
  double b;
  double b_prime;
  bool positive_branch;
};

// counter / positive is the disbelief ratio, (Q0/Q1)/(P0/P1) in rate form or
// P(h|e0)/P(h|e1) in selecting-rule form.
Belief belief_from_ratio(double counter, double positive) {
  if (counter <= positive) {
    const double b_prime = positive > 0.0 ? counter / positive : 1.0;
    return {1.0 - b_prime, b_prime, true};
  }
  const double b_prime = positive / counter;
  return {b_prime - 1.0, b_prime, false};
}

DocCase classify(bool positive_branch, Polarity polarity) {
  if (polarity == Polarity::Affirmative) {
    return positive_branch ? DocCase::ProperAffirmation : DocCase::ExcessiveAffirmation;
  }
  return positive_branch ? DocCase::ProperNegation : DocCase::ExcessiveNegation;
}

double information_at(const Belief& belief, const RateSpec& r, Polarity polarity) {
  const Distribution prior(binary_alphabet(), {r.p1, r.p0});
  const Distribution sampling(binary_alphabet(), {r.q1, r.q0});
  const auto base = TruthFunction::crisp({polarity == Polarity::Affirmative ? "e1" : "e0"});
  return average_semantic_info(belief_adjust(base, belief.b), prior, sampling);
}

DocResult assemble(const Belief& belief, const RateSpec& r, Polarity polarity) {
  return {belief.b, belief.b_prime, classify(belief.positive_branch, polarity), information_at(belief, r, polarity)};
}

// Rates implied by a prior P(e1) and a selecting rule (P(h|e1), P(h|e0)).
RateSpec rates_from_rule(double prior_e1, double rule_e1, double rule_e0) {
  const double a = prior_e1 * rule_e1;
  const double c = (1.0 - prior_e1) * rule_e0;
  if (!(a + c > 0.0)) throw Error(ErrorKind::ZeroSelectionMass, "hypothesis is never selected");
  return {1.0 - prior_e1, prior_e1, c / (a + c), a / (a + c)};
}

void check_count(double n, const char* name) {
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::NegativeMass, std::string(name) + " must be a non-negative count");
  }
}

}  // namespace

std::string_view to_string(DocCase c) noexcept {
  switch (c) {
    case DocCase::ProperAffirmation: return "proper-affirmation";
    case DocCase::ExcessiveAffirmation: return "excessive-affirmation";
    case DocCase::ProperNegation: return "proper-negation";
    case DocCase::ExcessiveNegation: return "excessive-negation";
  }
  return "unknown";
}

void ContingencyTable::validate() const {
  check_count(n11, "n11");
  check_count(n10, "n10");
  check_count(n01, "n01");
  check_count(n00, "n00");
  if (!(total() > 0.0)) throw Error(ErrorKind::DegenerateInput, "contingency table is empty");
}

void RateSpec::validate(double tolerance) const {
  for (double v : {p0, p1, q0, q1}) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorKind::NegativeMass, "rates must be non-negative");
  }
  if (std::abs(p0 + p1 - 1.0) > tolerance) throw Error(ErrorKind::NotNormalized, "P0 + P1 must be 1");
  if (std::abs(q0 + q1 - 1.0) > tolerance) throw Error(ErrorKind::NotNormalized, "Q0 + Q1 must be 1");
}

RateSpec rates_from_table(const ContingencyTable& t) {
  t.validate();
  const double row = t.n11 + t.n10;
  if (row == 0.0) throw Error(ErrorKind::EmptyRow, "no evidence satisfies S1 (n11 + n10 = 0)");
  const double n = t.total();
  return {(t.n10 + t.n00) / n, (t.n11 + t.n01) / n, t.n10 / row, t.n11 / row};
}

DocResult doc_from_rates(const RateSpec& spec, Polarity polarity) {
  spec.validate();
  // Predicted letter first, counterexample second.
  const bool affirm = polarity == Polarity::Affirmative;
  const double prior_pos = affirm ? spec.p1 : spec.p0;
  const double prior_neg = affirm ? spec.p0 : spec.p1;
  const double post_pos = affirm ? spec.q1 : spec.q0;
  const double post_neg = affirm ? spec.q0 : spec.q1;
  if ((prior_pos == 0.0 && post_pos > 0.0) || (prior_neg == 0.0 && post_neg > 0.0)) {
    throw Error(ErrorKind::DegenerateRates, "posterior has mass where the prior has none");
  }
  const Belief belief = belief_from_ratio(post_neg * prior_pos, prior_neg * post_pos);
  return assemble(belief, spec, polarity);
}

DocResult doc_h1_from_table(const ContingencyTable& t) {
  t.validate();
  if (t.n11 + t.n10 == 0.0) throw Error(ErrorKind::EmptyRow, "no evidence satisfies S1 (n11 + n10 = 0)");
  if (t.n00 + t.n10 == 0.0) throw Error(ErrorKind::EmptyColumn, "column e0 is empty (n00 + n10 = 0)");
  if (t.n01 + t.n11 == 0.0) throw Error(ErrorKind::EmptyColumn, "column e1 is empty (n01 + n11 = 0)");
  const double rule_e1 = t.n11 / (t.n01 + t.n11);
  const double rule_e0 = t.n10 / (t.n00 + t.n10);
  return assemble(belief_from_ratio(rule_e0, rule_e1), rates_from_table(t), Polarity::Affirmative);
}

DocResult doc_h2_from_table(const ContingencyTable& t) {
  t.validate();
  // h2 is selected outside S2 and predicts "not in S1".
  if (t.n10 + t.n00 == 0.0) throw Error(ErrorKind::EmptyColumn, "column e0 is empty (n10 + n00 = 0)");
  if (t.n11 + t.n10 == 0.0) throw Error(ErrorKind::EmptyRow, "row S1 is empty (n11 + n10 = 0)");
  if (t.n01 + t.n00 == 0.0) throw Error(ErrorKind::EmptyRow, "row not-S1 is empty (n01 + n00 = 0)");
  const double rule_pos = t.n00 / (t.n01 + t.n00);
  const double rule_neg = t.n10 / (t.n11 + t.n10);
  const double n = t.total();
  const double prior_pos = (t.n01 + t.n00) / n;
  const double col = t.n10 + t.n00;
  const RateSpec rates{1.0 - prior_pos, prior_pos, t.n10 / col, t.n00 / col};
  return assemble(belief_from_ratio(rule_neg, rule_pos), rates, Polarity::Affirmative);
}

TestDoc doc_from_test(double sensitivity, double specificity, double prior_e1) {
  if (!(sensitivity >= 0.0 && sensitivity <= 1.0) || !(specificity >= 0.0 && specificity <= 1.0)) {
    throw Error(ErrorKind::NegativeMass, "sensitivity and specificity must lie in [0,1]");
  }
  if (sensitivity == 0.0) throw Error(ErrorKind::ZeroSensitivity, "sensitivity must be positive");
  if (!(prior_e1 > 0.0 && prior_e1 < 1.0)) {
    throw Error(ErrorKind::DegenerateRates, "prior P(e1) must lie strictly between 0 and 1");
  }
  if (specificity == 0.0 && sensitivity == 1.0) {
    throw Error(ErrorKind::DegenerateRates, "a test that is always positive never reports '-'");
  }

  // "+" is selected with P(+|e1) = sensitivity, P(+|e0) = 1 - specificity.
  const Belief plus = belief_from_ratio(1.0 - specificity, sensitivity);
  const RateSpec plus_rates = rates_from_rule(prior_e1, sensitivity, 1.0 - specificity);
  // "-" predicts e0; its counterexample is an infected person testing negative.
  const Belief minus = belief_from_ratio(1.0 - sensitivity, specificity);
  const RateSpec minus_rates = rates_from_rule(prior_e1, 1.0 - sensitivity, specificity);

  return {assemble(plus, plus_rates, Polarity::Affirmative), assemble(minus, minus_rates, Polarity::Denial)};
}

double predicted_probability(double p_e1, double b_prime_star) {
  if (!(p_e1 >= 0.0 && p_e1 <= 1.0)) throw Error(ErrorKind::NegativeMass, "P(e1) must lie in [0,1]");
  if (!(b_prime_star >= 0.0 && b_prime_star <= 1.0)) {
    throw Error(ErrorKind::BeliefOutOfRange, "b'* must lie in [0,1]");
  }
  const double denom = p_e1 + b_prime_star * (1.0 - p_e1);
  if (denom == 0.0) throw Error(ErrorKind::ZeroDenominator, "P(e1) = 0 and b'* = 0");
  return p_e1 / denom;
}

RavenIncrements raven_increments(const ContingencyTable& t) {
  t.validate();
  if (t.n11 == 0.0) throw Error(ErrorKind::EmptyRow, "n11 must be positive");
  const double col0 = t.n00 + t.n10;
  if (col0 == 0.0) throw Error(ErrorKind::EmptyRow, "n00 + n10 must be positive");
  return {t.n10 * t.n01 / (col0 * t.n11 * t.n11), t.n10 * (t.n01 + t.n11) / (t.n11 * col0 * col0)};
}

}  // namespace semcal
