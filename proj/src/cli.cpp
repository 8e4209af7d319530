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

#include "semcal/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "semcal/error.hpp"
#include "semcal/gps.hpp"
#include "semcal/numfmt.hpp"
#include "semcal/reproduce.hpp"
#include "semcal/semantic_info.hpp"

namespace semcal::cli {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::optional<double> to_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

double require_number(const std::string& s, const std::string& what) {
  if (auto v = to_number(s)) return *v;
  throw Error(ErrorKind::ParseError, "cannot read " + what + " from '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-empty, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> data_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) lines.emplace_back(n, line);
  }
  return lines;
}

void add_doc(ReportRecord& r, const std::string& prefix, const DocResult& doc) {
  r.add(prefix + "b_star", doc.b_star);
  r.add(prefix + "b_prime_star", doc.b_prime_star);
  r.add(prefix + "case", std::string(to_string(doc.doc_case)));
  r.add(prefix + "information_bits", doc.information_bits, units::kBits);
}

std::string join_labels(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

}  // namespace

double tolerance_from_env() {
  const char* raw = std::getenv("SEMCAL_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return kNormalizationTolerance;
  const double tol = require_number(trim(raw), "SEMCAL_TOLERANCE");
  if (!(tol > 0.0)) throw Error(ErrorKind::ParseError, "SEMCAL_TOLERANCE must be positive");
  return tol;
}

std::vector<double> parse_number_list(const std::string& text, std::size_t expected) {
  auto parts = split(text, ',');
  if (parts.size() != expected) {
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(expected) + " comma-separated numbers in '" + text + "'");
  }
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(require_number(p, "a number"));
  return out;
}

ContingencyTable parse_table(const std::string& text) {
  auto v = parse_number_list(text, 4);
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::ParseError, "counts must be non-negative");
  }
  return {v[0], v[1], v[2], v[3]};
}

RateSpec parse_rates(const std::string& text) {
  auto v = parse_number_list(text, 4);
  return {v[0], v[1], v[2], v[3]};
}

std::pair<double, double> parse_test(const std::string& text) {
  auto v = parse_number_list(text, 2);
  return {v[0], v[1]};
}

TruthFunction parse_truth_function(const std::string& raw, const Alphabet& alphabet) {
  const std::string spec = trim(raw);
  auto has_prefix = [&](std::string_view p) { return spec.rfind(p, 0) == 0; };
  auto rest = [&](std::string_view p) { return spec.substr(p.size()); };

  if (spec == "tautology") return TruthFunction::tautology();
  if (spec == "contradiction") return TruthFunction::contradiction();
  if (has_prefix("const:")) return TruthFunction::constant(require_number(trim(rest("const:")), "a truth value"));
  if (has_prefix("not:")) return negate(parse_truth_function(rest("not:"), alphabet));
  if (has_prefix("crisp:")) {
    std::set<std::string> labels;
    for (const auto& l : split(rest("crisp:"), '|')) {
      if (l.empty()) continue;
      alphabet.index_of(l);
      labels.insert(l);
    }
    return TruthFunction::crisp(std::move(labels));
  }
  if (has_prefix("gauss:")) {
    auto v = parse_number_list(rest("gauss:"), 2);
    return TruthFunction::gaussian(v[0], v[1]);
  }
  if (has_prefix("belief:")) {
    const std::string body = rest("belief:");
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "belief spec needs belief:<b>:<inner>");
    const double b = require_number(trim(body.substr(0, colon)), "a degree of belief");
    return belief_adjust(parse_truth_function(body.substr(colon + 1), alphabet), b);
  }
  if (has_prefix("table:")) {
    auto items = split(rest("table:"), ',');
    const bool named = std::any_of(items.begin(), items.end(), [](const auto& s) { return s.find('=') != s.npos; });
    if (named) {
      std::map<std::string, double> values;
      for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "mixed named and positional table values");
        const std::string label = trim(item.substr(0, eq));
        alphabet.index_of(label);
        values[label] = require_number(trim(item.substr(eq + 1)), "a truth value");
      }
      if (values.size() != alphabet.size()) {
        throw Error(ErrorKind::AlphabetMismatch, "table truth function must give a value for every label");
      }
      return TruthFunction::tabular(std::move(values));
    }
    std::vector<double> values;
    for (const auto& item : items) values.push_back(require_number(item, "a truth value"));
    return TruthFunction::tabular(alphabet, values);
  }
  throw Error(ErrorKind::ParseError, "unrecognized truth function '" + spec + "'");
}

Distribution parse_distribution_csv(const std::string& text, double tolerance) {
  std::vector<std::string> labels;
  std::vector<double> probs;
  std::vector<double> positions;
  bool first = true;
  for (const auto& [n, line] : data_lines(text)) {
    auto fields = split(line, ',');
    if (fields.size() != 2 && fields.size() != 3) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(n) + ": expected label,probability[,position]");
    }
    if (first && !to_number(fields[1])) {
      first = false;
      continue;  // header
    }
    first = false;
    labels.push_back(fields[0]);
    probs.push_back(require_number(fields[1], "a probability on line " + std::to_string(n)));
    if (fields.size() == 3) positions.push_back(require_number(fields[2], "a position on line " + std::to_string(n)));
  }
  if (labels.empty()) throw Error(ErrorKind::ParseError, "distribution file has no entries");
  if (!positions.empty() && positions.size() != labels.size()) {
    throw Error(ErrorKind::ParseError, "either every line or no line may carry a position");
  }
  Alphabet alphabet = positions.empty() ? Alphabet(std::move(labels)) : Alphabet(std::move(labels), std::move(positions));
  return Distribution(std::move(alphabet), std::move(probs), tolerance);
}

Distribution read_distribution_csv(const std::string& path, double tolerance) {
  return parse_distribution_csv(read_file(path), tolerance);
}

std::vector<Sample> parse_samples_csv(const std::string& text) {
  std::vector<Sample> out;
  bool first = true;
  for (const auto& [n, line] : data_lines(text)) {
    auto fields = split(line, ',');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(n) + ": expected condition,label");
    }
    if (first && fields[0] == "condition" && fields[1] == "label") {
      first = false;
      continue;
    }
    first = false;
    out.push_back({fields[0], fields[1]});
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "samples file has no records");
  return out;
}

std::vector<Sample> read_samples_csv(const std::string& path) { return parse_samples_csv(read_file(path)); }

ReportRecord cmd_doc(const DocInput& input) {
  const int forms = int(input.table.has_value()) + int(input.rates.has_value()) + int(input.test.has_value());
  if (forms != 1) throw Error(ErrorKind::ParseError, "give exactly one of --table, --rates, --test");

  ReportRecord r{"doc", {}, {}, {}};
  if (input.table) {
    r.inputs.emplace_back("table", *input.table);
    const ContingencyTable t = parse_table(*input.table);
    const DocResult h1 = doc_h1_from_table(t);
    add_doc(r, "", h1);
    const RateSpec rates = rates_from_table(t);
    r.add("kl_information_bits",
          kl_divergence(Distribution(Alphabet({"e1", "e0"}), {rates.q1, rates.q0}),
                        Distribution(Alphabet({"e1", "e0"}), {rates.p1, rates.p0})),
          units::kBits);
    try {
      add_doc(r, "h2.", doc_h2_from_table(t));
    } catch (const Error& e) {
      r.warnings.push_back(std::string("contrapositive h2 not available: ") + e.what());
    }
    try {
      const RavenIncrements inc = raven_increments(t);
      r.add("raven.d_b1_d_n11", inc.d_b1_d_n11);
      r.add("raven.d_b1_d_n00", inc.d_b1_d_n00);
    } catch (const Error& e) {
      r.warnings.push_back(std::string("raven increments not available: ") + e.what());
    }
    for (auto& note : published_table_notes(t, h1)) r.warnings.push_back(std::move(note));
  } else if (input.rates) {
    r.inputs.emplace_back("rates", *input.rates);
    const RateSpec rates = parse_rates(*input.rates);
    add_doc(r, "", doc_from_rates(rates, Polarity::Affirmative));
    add_doc(r, "h0.", doc_from_rates(rates, Polarity::Denial));
  } else {
    r.inputs.emplace_back("test", *input.test);
    const double prevalence = input.prevalence.value_or(0.5);
    r.inputs.emplace_back("prevalence", shortest(prevalence));
    const auto [sensitivity, specificity] = parse_test(*input.test);
    const TestDoc doc = doc_from_test(sensitivity, specificity, prevalence);
    add_doc(r, "positive.", doc.positive);
    add_doc(r, "negative.", doc.negative);
    r.add("positive.predicted_probability", predicted_probability(prevalence, doc.positive.b_prime_star));
    if (!input.prevalence) r.warnings.push_back("no --prevalence given; information evaluated at P(e1) = 0.5");
  }
  return r;
}

ReportRecord cmd_info(const std::string& prior_path, const std::string& sampling_path, const std::string& tf_spec,
                      double tolerance) {
  const Distribution prior = read_distribution_csv(prior_path, tolerance);
  const Distribution sampling = read_distribution_csv(sampling_path, tolerance);
  require_same_alphabet(prior.alphabet(), sampling.alphabet());
  const TruthFunction tf = parse_truth_function(tf_spec, prior.alphabet());

  ReportRecord r{"info", {{"prior", prior_path}, {"sampling", sampling_path}, {"tf", tf.describe()}}, {}, {}};
  r.add("logical_probability", logical_probability(tf, prior));
  for (std::size_t i = 0; i < prior.size(); ++i) {
    r.add("pointwise[" + prior.alphabet().label(i) + "]", pointwise_semantic_info(tf, prior, i), units::kBits);
  }
  const double average = average_semantic_info(tf, prior, sampling);
  r.add("average_information_bits", average, units::kBits);
  const GklParts parts = gkl_decomposition(tf, prior, sampling);
  r.add("gkl.kl_info", parts.kl_info, units::kBits);
  r.add("gkl.penalty", parts.penalty, units::kBits);
  if (average == kNegInf) r.warnings.push_back("a sampled evidence has truth value 0: the hypothesis is falsified");

  const auto values = truth_values(tf, prior.alphabet());
  if (std::any_of(values.begin(), values.end(), [](double v) { return v > 0.0; })) {
    add_doc(r, "doc.", optimize_belief(tf, prior, sampling));
  }
  return r;
}

ReportRecord cmd_msie(const MsieInput& input, double tolerance) {
  ReportRecord r{"msie", {{"samples", input.samples_path}}, {}, {}};
  const auto records = read_samples_csv(input.samples_path);

  if (input.gps) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t max_cell = 0;
    for (const auto& s : records) {
      const double reported = require_number(s.condition, "a reported cell");
      const double actual = require_number(s.label, "a true cell");
      if (reported < 0 || actual < 0 || reported != std::floor(reported) || actual != std::floor(actual)) {
        throw Error(ErrorKind::ParseError, "GPS records must be non-negative integer cells");
      }
      pairs.emplace_back(static_cast<std::size_t>(actual), static_cast<std::size_t>(reported));
      max_cell = std::max({max_cell, pairs.back().first, pairs.back().second});
    }
    const std::size_t cells = input.cells.value_or(max_cell + 1);
    r.inputs.emplace_back("cells", std::to_string(cells));
    r.inputs.emplace_back("step", shortest(input.step));
    const GpsFit fit = gps_fit(GpsObservation::from_pairs(cells, input.step, pairs));
    r.add("gps.delta_e", fit.delta_e);
    r.add("gps.d", fit.d);
    r.add("gps.b", fit.b);
    r.add("gps.information_bits", fit.information_bits, units::kBits);
    return r;
  }

  std::optional<Distribution> prior;
  if (input.prior_path) {
    r.inputs.emplace_back("prior", *input.prior_path);
    prior = read_distribution_csv(*input.prior_path, tolerance);
  }
  const SampleSet samples = prior ? SampleSet(prior->alphabet(), records) : SampleSet(records);
  r.inputs.emplace_back("alphabet", join_labels(samples.alphabet().labels()));
  for (const auto& h : msie(samples, prior)) {
    const std::string p = h.condition + ".";
    r.add(p + "selection_probability", h.selection_probability);
    r.add(p + "truth_function", h.truth.describe());
    for (std::size_t i = 0; i < h.truth_values.size(); ++i) {
      r.add(p + "truth[" + samples.alphabet().label(i) + "]", h.truth_values[i]);
    }
    add_doc(r, p + "doc.", h.doc);
    r.add(p + "information_bits", h.information_bits, units::kBits);
  }
  return r;
}

std::string simulate_gps_csv(const GpsSimulation& sim) {
  const GpsModel model{sim.delta_e, sim.d, sim.c, sim.cells, sim.step};
  const GpsObservation obs = GpsObservation::from_model(model);
  // Deviations are translation invariant: draw from the row of true cell 0.
  std::vector<double> row(obs.joint.begin(), obs.joint.begin() + static_cast<std::ptrdiff_t>(sim.cells));
  std::mt19937_64 rng(sim.seed);
  std::uniform_int_distribution<std::size_t> pick_true(0, sim.cells - 1);
  std::discrete_distribution<std::size_t> pick_offset(row.begin(), row.end());
  std::string out = "condition,label\n";
  for (std::size_t k = 0; k < sim.draws; ++k) {
    const std::size_t actual = pick_true(rng);
    const std::size_t reported = (actual + pick_offset(rng)) % sim.cells;
    out += std::to_string(reported) + "," + std::to_string(actual) + "\n";
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantic information and degree-of-confirmation calculator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  DocInput doc_in;
  std::string table, rates, test;
  double prevalence = 0.5;
  auto* doc = app.add_subcommand("doc", "Degree of confirmation from a table, rates or test characteristics");
  auto* table_opt = doc->add_option("--table", table, "n11,n10,n01,n00");
  auto* rates_opt = doc->add_option("--rates", rates, "P0,P1,Q0,Q1");
  auto* test_opt = doc->add_option("--test", test, "sensitivity,specificity");
  auto* prev_opt = doc->add_option("--prevalence", prevalence, "P(e1) used for the information of test results");

  std::string prior_path, sampling_path, tf_spec;
  auto* info = app.add_subcommand("info", "Pointwise, average and decomposed semantic information");
  info->add_option("--prior", prior_path, "label,probability CSV")->required();
  info->add_option("--sampling", sampling_path, "label,probability CSV")->required();
  info->add_option("--tf", tf_spec, "truth function spec")->required();

  MsieInput msie_in;
  std::string msie_prior;
  std::size_t cells = 0;
  auto* msie_cmd = app.add_subcommand("msie", "Maximum semantic information estimation from samples");
  msie_cmd->add_option("--samples", msie_in.samples_path, "condition,label CSV")->required();
  auto* msie_prior_opt = msie_cmd->add_option("--prior", msie_prior, "label,probability CSV");
  msie_cmd->add_flag("--gps", msie_in.gps, "Read records as reported,true cells and fit the GPS model");
  auto* cells_opt = msie_cmd->add_option("--cells", cells, "Ring size for --gps (default: largest cell + 1)");
  msie_cmd->add_option("--step", msie_in.step, "Cell spacing for --gps");

  auto* repro = app.add_subcommand("reproduce", "Recompute the published worked examples");

  GpsSimulation sim;
  auto* simulate = app.add_subcommand("simulate-gps", "Draw reported,true GPS records from the deviation model");
  simulate->add_option("--cells", sim.cells);
  simulate->add_option("--step", sim.step);
  simulate->add_option("--delta", sim.delta_e);
  simulate->add_option("--d", sim.d);
  simulate->add_option("--c", sim.c);
  simulate->add_option("--draws", sim.draws);
  simulate->add_option("--seed", sim.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kInputError;
  }

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + out_path + "'");
    f << text;
  };

  try {
    ReportRecord record;
    int status = kSuccess;
    if (doc->parsed()) {
      if (*table_opt) doc_in.table = table;
      if (*rates_opt) doc_in.rates = rates;
      if (*test_opt) doc_in.test = test;
      if (*prev_opt) doc_in.prevalence = prevalence;
      record = cmd_doc(doc_in);
    } else if (info->parsed()) {
      record = cmd_info(prior_path, sampling_path, tf_spec, tolerance_from_env());
    } else if (msie_cmd->parsed()) {
      if (*msie_prior_opt) msie_in.prior_path = msie_prior;
      if (*cells_opt) msie_in.cells = cells;
      record = cmd_msie(msie_in, tolerance_from_env());
    } else if (repro->parsed()) {
      Reproduction rep = reproduce();
      record = std::move(rep.record);
      if (!rep.all_matched) status = kDegenerate;
    } else if (simulate->parsed()) {
      emit(simulate_gps_csv(sim));
      return kSuccess;
    }
    emit(format == "json" ? render_json(record) : render_text(record));
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_degeneracy(e.kind()) ? kDegenerate : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace semcal::cli
