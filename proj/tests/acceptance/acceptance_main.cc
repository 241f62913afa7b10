// Copyright 2026 The Flatscreen Authors.
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

// Acceptance suite: prints one PASS/FAIL line per criterion. The exit code
// is non-zero when a criterion fails that was not listed with --expect-fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flatscreen/correction.h"
#include "flatscreen/decoder.h"
#include "flatscreen/fixtures.h"
#include "flatscreen/harness.h"
#include "flatscreen/lexicon.h"
#include "flatscreen/models.h"
#include "flatscreen/network.h"
#include "flatscreen/random.h"
#include "flatscreen/synthetic.h"
#include "flatscreen/tagger.h"
#include "flatscreen/text_util.h"
#include "test_util.h"

namespace flatscreen {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string JoinWords(const std::vector<std::string> &words) {
  std::string out;
  for (const auto &w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Suite {
 public:
  explicit Suite(std::set<int> expected_failures)
      : expected_failures_(std::move(expected_failures)) {}

  void Run(int number, std::string_view name, const std::function<Outcome()> &check) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    Report(number, name, outcome, SecondsSince(start));
  }

  void Report(int number, std::string_view name, const Outcome &outcome, double seconds) {
    const bool expected = expected_failures_.count(number) > 0;
    std::cout << "criterion " << number << ": " << (outcome.pass ? "PASS" : "FAIL") << "  "
              << name << "  [" << outcome.detail << "; " << Fixed(seconds, 1) << " s]";
    if (!outcome.pass && expected) std::cout << "  (expected failure)";
    if (outcome.pass && expected) std::cout << "  (listed as expected failure)";
    std::cout << std::endl;
    if (!outcome.pass && !expected) ++unexpected_;
  }

  int unexpected() const { return unexpected_; }

 private:
  std::set<int> expected_failures_;
  int unexpected_ = 0;
};

std::vector<double> RandomVector(Rng &rng, size_t n) {
  std::vector<double> v(n);
  for (double &x : v) x = rng.Uniform();
  return v;
}

// Random initial weights, plain and scaled up. Trained weights leave many
// gradient components near 1e-8, where finite differences at this epsilon
// are dominated by rounding.
Outcome GradientCorrectness() {
  constexpr double kLimit = 1e-4;
  Rng rng(11);
  double worst = 0.0;
  size_t checks = 0;
  for (NetId id : kAllNets) {
    const NetworkSpec spec = NetSpec(id);
    std::vector<Network> nets = {InitNetwork(spec, 3), InitNetwork(spec, 4), InitNetwork(spec, 5)};
    // Larger weights push units towards saturation.
    for (double &w : nets[1].hidden_weights()) w *= 4.0;
    for (double &w : nets[1].output_weights()) w *= 4.0;
    for (double &w : nets[2].hidden_weights()) w *= 0.25;
    for (double &w : nets[2].output_weights()) w *= 0.25;
    for (const Network &net : nets) {
      for (int s = 0; s < 3; ++s) {
        const GradientSample sample{RandomVector(rng, spec.n_input),
                                    RandomVector(rng, spec.context_size()),
                                    RandomVector(rng, spec.n_output)};
        worst = std::max(worst, GradientCheck(net, sample, 1e-5));
        ++checks;
      }
    }
  }
  return {worst < kLimit, std::to_string(kNetCount) + " specs, " + std::to_string(checks) +
                              " checks, max rel error " + std::to_string(worst)};
}

// Two sequences ending in the same input; only the first input separates
// their final targets.
SequenceDataset AmbiguousFinalToken() {
  SequenceDataset data;
  data.sequences.push_back({{{1, 0, 0}, {1, 0}}, {{0, 0, 1}, {1, 0}}});
  data.sequences.push_back({{{0, 1, 0}, {0, 1}}, {{0, 0, 1}, {0, 1}}});
  return data;
}

Outcome ContextDependence() {
  const TrainingConfig regime{3000, 0.001, 14, 1};
  const SequenceDataset data = AmbiguousFinalToken();
  const auto srn = TrainNew(3, 2, true, data, regime);
  const auto ff = TrainNew(3, 2, false, data, regime);
  const double srn_acc = ArgmaxAccuracy(srn.network, data);
  const double ff_acc = ArgmaxAccuracy(ff.network, data);
  return {srn_acc == 1.0, "SRN train accuracy " + Fixed(srn_acc, 2) + ", feedforward " +
                              Fixed(ff_acc, 2) + ", final loss " +
                              Fixed(srn.loss_history.back(), 4)};
}

Outcome RegressionRows(const Models &models) {
  size_t labels = 0, mismatches = 0;
  std::ostringstream where;
  for (std::string_view id : {kRubbishMeanId, kRubbishHadId}) {
    const Utterance &gold = FixtureUtterance(id);
    std::vector<std::string> words;
    for (const auto &t : gold.tokens) words.push_back(t.word);
    const auto tags = TagSequence(MeetingLexicon(), models, words);
    for (size_t i = 0; i < tags.size(); ++i) {
      for (Axis axis : kAllAxes) {
        ++labels;
        if (tags[i].label(axis) != gold.tokens[i].label(axis)) {
          ++mismatches;
          where << " " << words[i] << "/" << AxisName(axis) << "=" << tags[i].label_name(axis);
        }
      }
    }
  }
  return {mismatches == 0 && labels == 40,
          std::to_string(labels) + " labels, " + std::to_string(mismatches) + " mismatches" +
              where.str()};
}

Outcome LatticeOracle(const Models &models) {
  const std::vector<std::string> words = {"ich", "meine", "habe", "am", "Montag",
                                          "Zeit", "ähm", "Termin", "um", "Uhr"};
  const Lexicon &lexicon = MeetingLexicon();
  size_t graphs = 0, paths = 0, discrepancies = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const WordGraph graph = testing::RandomGraph(seed, 8 + seed % 5, words);
    ++graphs;
    const RankingMode ranking = seed % 2 ? RankingMode::kNormalized : RankingMode::kRaw;
    const KnowledgeMode knowledge = static_cast<KnowledgeMode>(seed % 3);
    DecoderConfig config;
    config.ranking = ranking;
    config.knowledge = knowledge;
    config.apply_corrections = false;
    config.beam_width = testing::PrefixCount(graph, config.gap) + 1;
    const auto expected =
        testing::EnumeratePaths(graph, lexicon, models, config.gap, ranking, knowledge);
    const auto result = Decode(graph, lexicon, models, config);
    paths += expected.size();
    if (result.ranked.size() != expected.size()) {
      ++discrepancies;
      continue;
    }
    std::set<std::vector<size_t>> got_paths, want_paths;
    for (size_t i = 0; i < expected.size(); ++i) {
      const auto &got = result.ranked[i].state;
      got_paths.insert(got.hypotheses);
      want_paths.insert(expected[i].hypotheses);
      // Paths with equal words and key are interchangeable in the ranking.
      if (got.Words(graph) != expected[i].words ||
          std::abs(got.score.RankKey(ranking) - expected[i].key) > 1e-9) {
        ++discrepancies;
      }
    }
    if (got_paths != want_paths) ++discrepancies;
  }
  return {discrepancies == 0, std::to_string(graphs) + " graphs, " + std::to_string(paths) +
                                  " paths, " + std::to_string(discrepancies) + " discrepancies"};
}

Outcome ExampleGraph(const Models &models) {
  const WordGraph graph = ParseWordGraph(ExampleWordGraphText(), "example");
  const auto result = Decode(graph, MeetingLexicon(), models, DecoderConfig());
  if (!result.complete()) return {false, "no complete sequence"};
  const auto desired = SplitWhitespace(kExampleGraphSentence);
  auto variant = desired;
  variant.insert(variant.begin() + 6, "ich");

  const auto &top = result.ranked.front();
  const bool top_ok = top.state.Words(graph) == desired;
  bool top_marks = top_ok;
  if (top_ok) {
    for (size_t i = 0; i < desired.size(); ++i) {
      const DeletionReason want = i == 0 ? DeletionReason::kInterjection : DeletionReason::kNone;
      top_marks = top_marks && top.corrections.annotations[i].deleted == want;
    }
  }
  size_t variant_rank = 0;
  bool variant_marks = false;
  for (size_t r = 0; r < result.ranked.size(); ++r) {
    if (result.ranked[r].state.Words(graph) != variant) continue;
    variant_rank = r + 1;
    const auto &a = result.ranked[r].corrections.annotations;
    variant_marks = true;
    for (size_t i = 0; i < variant.size(); ++i) {
      DeletionReason want = DeletionReason::kNone;
      if (i == 0) want = DeletionReason::kInterjection;
      if (i == 5) want = DeletionReason::kWordRepair;
      variant_marks = variant_marks && a[i].deleted == want;
    }
  }
  std::string detail = "rank 1: \"" + JoinWords(top.state.Words(graph)) + "\"";
  detail += top_marks ? ", interjection marked" : ", marks wrong";
  detail += variant_rank ? ", ich-ich variant at rank " + std::to_string(variant_rank) +
                               (variant_marks ? " with repeat marked" : " with wrong marks")
                         : ", ich-ich variant not in the final list";
  return {top_ok && top_marks && variant_rank > 0 && variant_marks, detail};
}

Outcome KnowledgeBenefit(const EvalReport &report) {
  double mrr[3] = {0, 0, 0};
  size_t graphs = 0;
  for (const MrrResult &r : report.mrr) {
    mrr[static_cast<size_t>(r.mode)] = r.mrr;
    graphs = r.graphs;
  }
  const bool pass = graphs >= 50 && mrr[2] >= mrr[1] && mrr[1] >= mrr[0] && mrr[2] > mrr[0];
  return {pass, std::to_string(graphs) + " lattices, MRR acoustic " + Fixed(mrr[0]) +
                    ", acoustic+syn " + Fixed(mrr[1]) + ", full " + Fixed(mrr[2])};
}

Outcome SrnVsNgram(const EvalReport &report) {
  const CurveReport &syn = report.curves[0];
  bool monotone = true;
  for (const CurveReport &axis : report.curves) {
    for (const ExclusionCurve &curve : axis.curves) {
      for (size_t k = 1; k < curve.accuracy.size(); ++k) {
        monotone = monotone && curve.accuracy[k] <= curve.accuracy[k - 1];
      }
    }
  }
  const double srn = syn.curves[0].Mean();
  bool beats_all = true;
  std::string detail = "SRN mean " + Fixed(srn);
  for (size_t i = 1; i < syn.curves.size(); ++i) {
    beats_all = beats_all && srn > syn.curves[i].Mean();
    detail += ", " + syn.names[i] + " " + Fixed(syn.curves[i].Mean());
  }
  detail += monotone ? ", curves monotone" : ", curves not monotone";
  return {beats_all && monotone, detail};
}

void DecodeAll(std::span<const SynthGraph> graphs, const Lexicon &lexicon,
               const Models &models, size_t &decoded, size_t &completed) {
  for (const SynthGraph &g : graphs) {
    const auto result = Decode(g.graph, lexicon, models, DecoderConfig());
    ++decoded;
    if (result.complete()) ++completed;
  }
}

Outcome Robustness(const Experiment &experiment, const EvalReport &report,
                   const ExperimentConfig &config) {
  const Lexicon &lexicon = MeetingLexicon();
  const Models &models = experiment.models;
  size_t tagged = 0, decoded = 0, completed = 0;

  // Unknown words only.
  Rng rng(5);
  for (size_t n = 1; n <= 20; ++n) {
    std::vector<std::string> words;
    for (size_t i = 0; i < n; ++i) words.push_back("xq" + std::to_string(rng.Below(1000)));
    AnalyzeTranscript(words, lexicon, models);
    ++tagged;
    const WordGraph graph = testing::RandomGraph(n, 3 + n % 10, words);
    Decode(graph, lexicon, models, DecoderConfig());
    ++decoded;
  }

  // Ablated lexica.
  const auto lattices =
      BuildLattices(experiment.test, config.grammar.noise, lexicon, 40, config.seed + 7);
  for (double fraction : {0.05, 0.10}) {
    for (uint64_t seed : {1, 2, 3}) {
      const Lexicon ablated = Ablate(lexicon, fraction, seed);
      for (const Utterance *u : experiment.corpus.Utterances()) {
        std::vector<std::string> words;
        for (const auto &t : u->tokens) words.push_back(t.word);
        AnalyzeTranscript(words, ablated, models);
        ++tagged;
      }
      DecodeAll(lattices, ablated, models, decoded, completed);
    }
  }

  // Randomized lattices with varying noise.
  for (uint64_t batch = 0; batch < 10; ++batch) {
    NoiseConfig noise = config.grammar.noise;
    noise.confusion_rate = 0.2 + 0.08 * batch;
    noise.hypotheses_per_word = 2.0 + batch;
    noise.seed = 100 + batch;
    const auto graphs = BuildLattices(experiment.corpus, noise, lexicon, 100, 1000 + batch);
    DecodeAll(graphs, lexicon, models, decoded, completed);
  }

  double syn_drop = 0.0, sem_drop = 0.0;
  size_t rows = 0;
  for (const AblationRow &row : report.ablation) {
    if (std::abs(row.fraction - 0.10) > 1e-12) continue;
    syn_drop += row.syn_drop;
    sem_drop += row.sem_drop;
    ++rows;
  }
  if (rows == 0) return {false, "no 10% ablation rows"};
  syn_drop /= rows;
  sem_drop /= rows;
  const bool pass = syn_drop <= 0.10 && sem_drop <= 0.10;
  return {pass, std::to_string(tagged) + " tagged, " + std::to_string(decoded) +
                    " decoded without failure (" + std::to_string(completed) +
                    " complete), 10% ablation drop syn " + Fixed(syn_drop) + " sem " +
                    Fixed(sem_drop)};
}

std::string DecodeJson(const WordGraph &graph, const Models &models, size_t threads) {
  DecoderConfig config;
  config.threads = threads;
  config.record_trace = true;
  const auto result = Decode(graph, MeetingLexicon(), models, config);
  return DecodeResultToJson(result, graph, config.ranking, true);
}

Outcome Determinism(const Experiment &experiment, const std::string &eval_json,
                    ExperimentConfig config) {
  const Lexicon &lexicon = MeetingLexicon();
  size_t comparisons = 0, differences = 0;
  auto compare = [&](const std::string &a, const std::string &b) {
    ++comparisons;
    if (a != b) ++differences;
  };

  compare(eval_json, Evaluate(experiment, config, lexicon).ToJson());
  ExperimentConfig threaded = config;
  threaded.threads = 3;
  threaded.decoder.threads = 3;
  const Experiment other = PrepareExperiment(threaded, lexicon);
  compare(eval_json, Evaluate(other, threaded, lexicon).ToJson());

  std::vector<WordGraph> graphs = {ParseWordGraph(ExampleWordGraphText(), "example")};
  for (const SynthGraph &g :
       BuildLattices(experiment.test, config.grammar.noise, lexicon, 10, config.seed + 3)) {
    graphs.push_back(g.graph);
  }
  for (const WordGraph &graph : graphs) {
    const std::string base = DecodeJson(graph, experiment.models, 1);
    compare(base, DecodeJson(graph, experiment.models, 1));
    compare(base, DecodeJson(graph, experiment.models, 4));
    compare(base, DecodeJson(graph, other.models, 2));
  }
  return {differences == 0, std::to_string(comparisons) + " output comparisons, " +
                                std::to_string(differences) + " differ"};
}

int RunSuite(const std::set<int> &expected_failures) {
  const auto suite_start = Clock::now();
  Suite suite(expected_failures);
  const ExperimentConfig config;
  const Lexicon &lexicon = MeetingLexicon();

  auto start = Clock::now();
  const Experiment experiment = PrepareExperiment(config, lexicon);
  const double train_seconds = SecondsSince(start);
  start = Clock::now();
  const EvalReport report = Evaluate(experiment, config, lexicon);
  const std::string eval_json = report.ToJson();
  std::cout << "training " << Fixed(train_seconds, 1) << " s, evaluation "
            << Fixed(SecondsSince(start), 1) << " s" << std::endl;

  suite.Run(1, "gradient check of every network spec",
            GradientCorrectness);
  suite.Run(2, "context dependence under the reference regime", ContextDependence);
  suite.Run(3, "regression sentence tagging", [&] { return RegressionRows(experiment.models); });
  suite.Run(4, "wide beam equals exhaustive search",
            [&] { return LatticeOracle(experiment.models); });
  suite.Run(5, "example word graph", [&] { return ExampleGraph(experiment.models); });
  suite.Run(6, "knowledge combination MRR", [&] { return KnowledgeBenefit(report); });
  suite.Run(7, "SRN vs n-gram exclusion curves", [&] { return SrnVsNgram(report); });
  suite.Run(8, "robustness and ablation drop",
            [&] { return Robustness(experiment, report, config); });
  suite.Run(9, "deterministic decode and eval output",
            [&] { return Determinism(experiment, eval_json, config); });
  const double total = SecondsSince(suite_start);
  suite.Report(10, "desk-scale budget",
               {total < 600.0, "whole suite " + Fixed(total, 1) + " s of 600 s"}, 0.0);
  return suite.unexpected() == 0 ? 0 : 1;
}

}  // namespace
}  // namespace flatscreen

int main(int argc, char **argv) {
  CLI::App app{"Acceptance suite"};
  std::vector<int> expected;
  app.add_option("--expect-fail", expected, "Criteria whose failure does not fail the run")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  try {
    return flatscreen::RunSuite({expected.begin(), expected.end()});
  } catch (const std::exception &e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
}
