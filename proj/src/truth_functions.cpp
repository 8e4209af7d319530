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

#include "semcal/truth_functions.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "semcal/error.hpp"
#include "semcal/numfmt.hpp"

namespace semcal {

namespace {

struct ConstantNode {
  double value;
};
struct CrispNode {
  std::set<std::string> labels;
  bool complemented;
};
struct GaussianNode {
  double center;
  double stddev;
};
struct TabularNode {
  std::map<std::string, double> values;
};
struct AdjustedNode {
  TruthFunction base;
  double belief;
};
struct ComplementNode {
  TruthFunction base;
};

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void check_unit(double v, const std::string& what) {
  if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::NegativeMass, what + " must lie in [0,1]");
}

}  // namespace

struct TruthFunction::Node {
  std::variant<ConstantNode, CrispNode, GaussianNode, TabularNode, AdjustedNode, ComplementNode> v;
};

TruthFunction TruthFunction::constant(double value) {
  check_unit(value, "constant truth value");
  return TruthFunction(std::make_shared<const Node>(Node{ConstantNode{value}}));
}

TruthFunction TruthFunction::crisp(std::set<std::string> positive_set) {
  return TruthFunction(std::make_shared<const Node>(Node{CrispNode{std::move(positive_set), false}}));
}

TruthFunction TruthFunction::gaussian(double center, double stddev) {
  if (!(stddev > 0.0) || !std::isfinite(stddev) || !std::isfinite(center)) {
    throw Error(ErrorKind::DegenerateInput, "Gaussian truth function needs a finite center and stddev > 0");
  }
  return TruthFunction(std::make_shared<const Node>(Node{GaussianNode{center, stddev}}));
}

TruthFunction TruthFunction::tabular(std::map<std::string, double> values) {
  for (const auto& [label, v] : values) check_unit(v, "truth value of '" + label + "'");
  return TruthFunction(std::make_shared<const Node>(Node{TabularNode{std::move(values)}}));
}

TruthFunction TruthFunction::tabular(const Alphabet& alphabet, const std::vector<double>& values) {
  if (values.size() != alphabet.size()) {
    throw Error(ErrorKind::AlphabetMismatch, "one truth value per label is required");
  }
  std::map<std::string, double> m;
  for (std::size_t i = 0; i < values.size(); ++i) m.emplace(alphabet.label(i), values[i]);
  return tabular(std::move(m));
}

TruthFunction::Kind TruthFunction::kind() const noexcept {
  return static_cast<Kind>(node_->v.index());
}

double TruthFunction::operator()(const Evidence& e) const {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstantNode>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, CrispNode>) {
          const bool in = n.labels.count(e.label) > 0;
          return (in != n.complemented) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, GaussianNode>) {
          if (!e.position) {
            throw Error(ErrorKind::UnknownLabel, "label '" + e.label + "' has no position for a Gaussian truth function");
          }
          const double z = (*e.position - n.center) / n.stddev;
          return std::exp(-0.5 * z * z);
        } else if constexpr (std::is_same_v<T, TabularNode>) {
          auto it = n.values.find(e.label);
          if (it == n.values.end()) {
            throw Error(ErrorKind::UnknownLabel, "no truth value for label '" + e.label + "'");
          }
          return it->second;
        } else if constexpr (std::is_same_v<T, AdjustedNode>) {
          const double t = n.base(e);
          if (n.belief >= 0.0) return clamp01((1.0 - n.belief) + n.belief * t);
          return clamp01(1.0 + n.belief * t);
        } else {
          return clamp01(1.0 - n.base(e));
        }
      },
      node_->v);
}

std::string TruthFunction::describe() const {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstantNode>) {
          if (n.value == 1.0) return "tautology";
          if (n.value == 0.0) return "contradiction";
          return "const:" + shortest(n.value);
        } else if constexpr (std::is_same_v<T, CrispNode>) {
          std::string s = n.complemented ? "not:crisp:" : "crisp:";
          bool first = true;
          for (const auto& l : n.labels) {
            if (!first) s += '|';
            s += l;
            first = false;
          }
          return s;
        } else if constexpr (std::is_same_v<T, GaussianNode>) {
          return "gauss:" + shortest(n.center) + "," + shortest(n.stddev);
        } else if constexpr (std::is_same_v<T, TabularNode>) {
          std::string s = "table:";
          bool first = true;
          for (const auto& [l, v] : n.values) {
            if (!first) s += ',';
            s += l + "=" + shortest(v);
            first = false;
          }
          return s;
        } else if constexpr (std::is_same_v<T, AdjustedNode>) {
          return "belief:" + shortest(n.belief) + ":" + n.base.describe();
        } else {
          return "not:" + n.base.describe();
        }
      },
      node_->v);
}

double TruthFunction::constant_value() const { return std::get<ConstantNode>(node_->v).value; }
const std::set<std::string>& TruthFunction::crisp_set() const { return std::get<CrispNode>(node_->v).labels; }
bool TruthFunction::crisp_complemented() const { return std::get<CrispNode>(node_->v).complemented; }
double TruthFunction::belief() const { return std::get<AdjustedNode>(node_->v).belief; }

const TruthFunction& TruthFunction::base() const {
  if (auto* a = std::get_if<AdjustedNode>(&node_->v)) return a->base;
  return std::get<ComplementNode>(node_->v).base;
}

double evaluate(const TruthFunction& tf, const Evidence& e) { return tf(e); }

double evaluate(const TruthFunction& tf, const Alphabet& alphabet, std::size_t i) {
  return tf(alphabet.evidence(i));
}

double evaluate(const TruthFunction& tf, double x) { return tf(Evidence{shortest(x), x}); }

std::vector<double> truth_values(const TruthFunction& tf, const Alphabet& alphabet) {
  std::vector<double> out(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) out[i] = tf(alphabet.evidence(i));
  return out;
}

double logical_probability(const TruthFunction& tf, const Distribution& prior) {
  double t = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) t += prior[i] * tf(prior.alphabet().evidence(i));
  return t;
}

Distribution semantic_bayes(const Distribution& prior, const TruthFunction& tf) {
  const auto truth = truth_values(tf, prior.alphabet());
  double t = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) t += prior[i] * truth[i];
  if (!(t > 0.0)) {
    throw Error(ErrorKind::ZeroLogicalProbability, "predicate is a contradiction under this prior");
  }
  std::vector<double> out(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) out[i] = prior[i] * truth[i] / t;
  return Distribution(prior.alphabet(), std::move(out));
}

TruthFunction negate(const TruthFunction& tf) {
  using Node = TruthFunction::Node;
  return std::visit(
      [&](const auto& n) -> TruthFunction {
        using T = std::decay_t<decltype(n)>;
        // Only exact flips are rewritten so that negation stays an exact involution.
        if constexpr (std::is_same_v<T, ConstantNode>) {
          if (n.value == 0.0 || n.value == 1.0) return TruthFunction::constant(1.0 - n.value);
          return TruthFunction(std::make_shared<const Node>(Node{ComplementNode{tf}}));
        } else if constexpr (std::is_same_v<T, CrispNode>) {
          return TruthFunction(std::make_shared<const Node>(Node{CrispNode{n.labels, !n.complemented}}));
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return n.base;
        } else {
          return TruthFunction(std::make_shared<const Node>(Node{ComplementNode{tf}}));
        }
      },
      tf.node_->v);
}

TruthFunction belief_adjust(const TruthFunction& tf, double belief) {
  if (!(belief >= -1.0 && belief <= 1.0)) {
    throw Error(ErrorKind::BeliefOutOfRange, "degree of belief " + shortest(belief) + " is outside [-1,1]");
  }
  using Node = TruthFunction::Node;
  return TruthFunction(std::make_shared<const Node>(Node{AdjustedNode{tf, belief}}));
}

}  // namespace semcal
