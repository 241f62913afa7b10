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

#include "flatscreen/harness.h"

#include <algorithm>
#include <chrono>
#include <initializer_list>
#include <set>

#include "json.hpp"

#include "flatscreen/correction.h"
#include "flatscreen/error.h"
#include "flatscreen/parallel.h"
#include "flatscreen/text_util.h"

namespace flatscreen {
namespace {

using Json = nlohmann::ordered_json;

void CheckKeys(const Json &object, std::initializer_list<std::string_view> allowed,
               const std::string &where) {
  if (!object.is_object()) throw Error(where + ": expected a JSON object");
  for (const auto &item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw Error(where + ": unknown key '" + item.key() + "'");
    }
  }
}

template <typename T>
void Read(const Json &object, const char *key, T &out) {
  if (object.contains(key)) out = object.at(key).get<T>();
}

// Shared per-utterance runner with an ordered reduction.
template <typename Fn>
FlatScore SumOverUtterances(const AnnotatedCorpus &corpus, size_t threads, Fn fn) {
  const auto utterances = corpus.Utterances();
  std::vector<FlatScore> scores(utterances.size());
  ParallelFor(utterances.size(), threads,
              [&](size_t i) { scores[i] = fn(*utterances[i]); });
  FlatScore total;
  for (const auto &s : scores) total += s;
  return total;
}

Json FlatJson(const FlatScore &score) {
  return {{"phrases", score.phrases}, {"syn", score.syn()}, {"sem", score.sem()}};
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (utterances == 0) throw Error("experiment needs at least one utterance");
  grammar.noise.Validate();
  training.Validate();
  decoder.Validate();
  if (threads < 1) throw Error("thread count must be at least 1");
  if (!(unknown_rate >= 0.0 && unknown_rate <= 1.0)) {
    throw Error("unknown-word rate must lie in [0, 1]");
  }
  for (double f : ablation_fractions) {
    if (!(f >= 0.0 && f < 1.0)) throw Error("ablation fractions must lie in [0, 1)");
  }
}

ExperimentConfig ParseExperimentConfig(std::string_view text, const std::string &source) {
  Json json;
  try {
    json = Json::parse(text, nullptr, true, true);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(source, 0, e.what());
  }
  ExperimentConfig config;
  try {
    CheckKeys(json,
              {"utterances", "seed", "fixture_repeats", "grammar", "noise", "training",
               "decoder", "lattices", "ablation_fractions", "ablation_seeds", "threads",
               "unknown_rate"},
              source);
    Read(json, "utterances", config.utterances);
    Read(json, "seed", config.seed);
    Read(json, "fixture_repeats", config.fixture_repeats);
    Read(json, "lattices", config.lattices);
    Read(json, "ablation_fractions", config.ablation_fractions);
    Read(json, "ablation_seeds", config.ablation_seeds);
    Read(json, "threads", config.threads);
    Read(json, "unknown_rate", config.unknown_rate);
    if (json.contains("grammar")) {
      const Json &g = json.at("grammar");
      CheckKeys(g, {"templates", "min_utterances_per_turn", "max_utterances_per_turn",
                    "train_every"}, source + ": grammar");
      Read(g, "templates", config.grammar.templates);
      Read(g, "min_utterances_per_turn", config.grammar.min_utterances_per_turn);
      Read(g, "max_utterances_per_turn", config.grammar.max_utterances_per_turn);
      Read(g, "train_every", config.grammar.train_every);
    }
    if (json.contains("noise")) {
      const Json &n = json.at("noise");
      NoiseConfig &noise = config.grammar.noise;
      CheckKeys(n, {"interjection_rate", "repetition_rate", "substitution_rate",
                    "restart_rate", "confusion_rate", "hypotheses_per_word", "seed"},
                source + ": noise");
      Read(n, "interjection_rate", noise.interjection_rate);
      Read(n, "repetition_rate", noise.repetition_rate);
      Read(n, "substitution_rate", noise.substitution_rate);
      Read(n, "restart_rate", noise.restart_rate);
      Read(n, "confusion_rate", noise.confusion_rate);
      Read(n, "hypotheses_per_word", noise.hypotheses_per_word);
      Read(n, "seed", noise.seed);
    }
    if (json.contains("training")) {
      const Json &t = json.at("training");
      CheckKeys(t, {"epochs", "learning_rate", "hidden_units"}, source + ": training");
      Read(t, "epochs", config.training.epochs);
      Read(t, "learning_rate", config.training.learning_rate);
      Read(t, "hidden_units", config.training.hidden_units);
    }
    if (json.contains("decoder")) {
      const Json &d = json.at("decoder");
      CheckKeys(d, {"beam_width", "gap", "ranking", "knowledge", "apply_corrections"},
                source + ": decoder");
      Read(d, "beam_width", config.decoder.beam_width);
      Read(d, "gap", config.decoder.gap);
      Read(d, "apply_corrections", config.decoder.apply_corrections);
      if (d.contains("ranking")) {
        auto mode = RankingFromName(d.at("ranking").get<std::string>());
        if (!mode) throw Error(source + ": unknown ranking mode");
        config.decoder.ranking = *mode;
      }
      if (d.contains("knowledge")) {
        auto mode = KnowledgeFromName(d.at("knowledge").get<std::string>());
        if (!mode) throw Error(source + ": unknown knowledge mode");
        config.decoder.knowledge = *mode;
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(source, 0, e.what());
  }
  config.training.seed = config.seed;
  config.Validate();
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path &path) {
  return ParseExperimentConfig(ReadFile(path), path.string());
}

double NetworkAccuracy(const Network &network, const SequenceDataset &dataset) {
  if (dataset.empty()) throw Error("network accuracy needs a non-empty dataset");
  dataset.CheckCompatible(network.spec());
  return ArgmaxAccuracy(network, dataset);
}

std::vector<TokenAnnotation> AnalyzeTranscript(std::span<const std::string> words,
                                               const Lexicon &lexicon,
                                               const Models &models) {
  return ApplyCorrections(TagSequence(lexicon, models, words), lexicon, models).annotations;
}

FlatScore &FlatScore::operator+=(const FlatScore &other) {
  phrases += other.phrases;
  syn_correct += other.syn_correct;
  sem_correct += other.sem_correct;
  return *this;
}

FlatScore ScoreFlatPhrases(std::span<const TokenAnnotation> system,
                           const Utterance &gold) {
  FlatScore score;
  const auto gold_phrases = GoldPhrases(gold);
  score.phrases = gold_phrases.size();
  bool any_survivor = false;
  for (const auto &a : system) any_survivor = any_survivor || !a.is_deleted();
  if (!any_survivor) return score;
  const auto system_phrases = FinalizePhrases(system);
  for (const auto &g : gold_phrases) {
    for (const auto &s : system_phrases) {
      if (s.tokens != g.tokens) continue;
      if (s.abs_syn == g.abs_syn) ++score.syn_correct;
      if (s.abs_sem == g.abs_sem) ++score.sem_correct;
      break;
    }
  }
  return score;
}

FlatScore OverallFlatAccuracy(const AnnotatedCorpus &corpus, const Lexicon &lexicon,
                              const Models &models, size_t threads) {
  return SumOverUtterances(corpus, threads, [&](const Utterance &u) {
    const auto words = u.Words();
    return ScoreFlatPhrases(AnalyzeTranscript(words, lexicon, models), u);
  });
}

std::vector<AblationRow> AblationExperiment(const AnnotatedCorpus &corpus,
                                            const Lexicon &lexicon,
                                            const Models &models,
                                            std::span<const double> fractions,
                                            std::span<const uint64_t> seeds,
                                            size_t threads) {
  std::vector<AblationRow> rows;
  AblationRow baseline;
  baseline.score = OverallFlatAccuracy(corpus, lexicon, models, threads);
  rows.push_back(baseline);
  for (double fraction : fractions) {
    if (fraction == 0.0) continue;
    for (uint64_t seed : seeds) {
      const Lexicon ablated = Ablate(lexicon, fraction, seed);
      AblationRow row;
      row.fraction = fraction;
      row.seed = seed;
      row.removed = lexicon.size() - ablated.size();
      row.score = OverallFlatAccuracy(corpus, ablated, models, threads);
      row.syn_drop = baseline.score.syn() - row.score.syn();
      row.sem_drop = baseline.score.sem() - row.score.sem();
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<LabelSequence> GoldLabelSequences(const AnnotatedCorpus &corpus, Axis axis) {
  std::vector<LabelSequence> out;
  for (const Utterance *u : corpus.Utterances()) {
    LabelSequence labels;
    for (const AnnotatedToken *t : PredictionStream(*u)) labels.push_back(t->label(axis));
    if (!labels.empty()) out.push_back(std::move(labels));
  }
  return out;
}

std::array<CurveReport, 2> SrnVsNgramReport(const AnnotatedCorpus &train,
                                            const AnnotatedCorpus &test,
                                            const Models &models, size_t threads) {
  std::array<CurveReport, 2> reports;
  const std::array<std::pair<Axis, NetId>, 2> axes = {
      {{Axis::kBasicSyn, NetId::kBasSynPre}, {Axis::kBasicSem, NetId::kBasSemPre}}};
  for (size_t a = 0; a < 2; ++a) {
    const auto [axis, net] = axes[a];
    const size_t vocabulary = AxisSize(axis);
    const auto train_sequences = GoldLabelSequences(train, axis);
    const auto test_sequences = GoldLabelSequences(test, axis);
    CurveReport &report = reports[a];
    report.axis = axis;
    report.names.push_back("SRN");
    report.curves.push_back(ComputeExclusionCurve(NetworkPredictorFactory(models.net(net)),
                                                  test_sequences, vocabulary, threads));
    for (size_t n = 1; n <= NgramModel::kMaxOrder; ++n) {
      const NgramModel model =
          NgramModel::Fit(train_sequences, n, Smoothing::kWittenBell, vocabulary);
      report.names.push_back(std::to_string(n) + "-gram");
      report.curves.push_back(ComputeExclusionCurve(NgramPredictorFactory(model),
                                                    test_sequences, vocabulary, threads));
    }
  }
  return reports;
}

double ForwardStepSeconds(const Network &network, size_t iterations) {
  if (iterations == 0) throw Error("timing needs at least one iteration");
  std::vector<double> input(network.spec().n_input, 0.0);
  std::vector<double> context = network.InitialContext();
  std::vector<double> hidden(network.spec().n_hidden);
  std::vector<double> output(network.spec().n_output);
  const auto start = std::chrono::steady_clock::now();
  for (size_t i = 0; i < iterations; ++i) {
    input[i % input.size()] = 1.0;
    network.Forward(input, context, hidden, output);
    input[i % input.size()] = 0.0;
    if (!context.empty()) context.swap(hidden);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double>(elapsed).count() / static_cast<double>(iterations);
}

std::vector<SynthGraph> BuildLattices(const AnnotatedCorpus &corpus,
                                      const NoiseConfig &noise,
                                      const Lexicon &lexicon, size_t count,
                                      uint64_t seed) {
  const auto utterances = corpus.Utterances();
  if (utterances.empty() && count > 0) throw Error("no utterances to build lattices from");
  std::vector<SynthGraph> graphs;
  for (size_t i = 0; i < count; ++i) {
    graphs.push_back(SynthWordGraph(*utterances[i % utterances.size()], noise, lexicon,
                                    seed * 1000003ULL + i));
  }
  return graphs;
}

double GoldPathReciprocalRank(const DecodeResult &result, const SynthGraph &graph) {
  for (size_t r = 0; r < result.ranked.size(); ++r) {
    if (result.ranked[r].state.hypotheses == graph.gold_path) return 1.0 / (r + 1);
  }
  return 0.0;
}

MrrResult GoldPathMrr(std::span<const SynthGraph> graphs, const Lexicon &lexicon,
                      const Models &models, DecoderConfig config) {
  MrrResult result;
  result.mode = config.knowledge;
  result.graphs = graphs.size();
  if (graphs.empty()) return result;
  const size_t threads = config.threads;
  config.threads = 1;
  config.apply_corrections = false;
  config.record_trace = false;
  std::vector<double> rr(graphs.size());
  ParallelFor(graphs.size(), threads, [&](size_t i) {
    rr[i] = GoldPathReciprocalRank(Decode(graphs[i].graph, lexicon, models, config),
                                   graphs[i]);
  });
  double sum = 0.0;
  for (double r : rr) {
    sum += r;
    if (r > 0.0) ++result.found;
  }
  result.mrr = sum / static_cast<double>(graphs.size());
  return result;
}

Experiment PrepareExperiment(const ExperimentConfig &config, const Lexicon &lexicon) {
  config.Validate();
  Experiment e;
  e.corpus = BuildExperimentCorpus(config.grammar, config.utterances, config.seed,
                                   config.fixture_repeats);
  e.train = e.corpus.Subset(SplitKind::kTrain);
  e.test = e.corpus.Subset(SplitKind::kTest);
  e.train_sets = DeriveTrainingSets(e.train, lexicon, {config.unknown_rate, true, config.seed});
  if (e.test.UtteranceCount() > 0) e.test_sets = DeriveTrainingSets(e.test, lexicon);
  ModelTrainingConfig training{config.training, config.threads};
  training.base.seed = config.seed;
  e.models = TrainModels(e.train_sets, training).models;
  return e;
}

EvalReport Evaluate(const Experiment &e, const ExperimentConfig &config,
                    const Lexicon &lexicon) {
  EvalReport report;
  report.config = config;
  report.train_turns = e.train.turns.size();
  report.test_turns = e.test.turns.size();
  report.train_utterances = e.train.UtteranceCount();
  report.test_utterances = e.test.UtteranceCount();
  report.train_tokens = e.train.TokenCount();
  report.test_tokens = e.test.TokenCount();

  const Models untrained = Models::Initialized(config.seed, config.training.hidden_units);
  for (NetId id : kAllNets) {
    NetworkScore score{id};
    if (!e.train_sets[id].empty()) {
      score.untrained_train = NetworkAccuracy(untrained.net(id), e.train_sets[id]);
      score.train = NetworkAccuracy(e.models.net(id), e.train_sets[id]);
    }
    if (!e.test_sets[id].empty()) score.test = NetworkAccuracy(e.models.net(id), e.test_sets[id]);
    report.networks.push_back(score);
  }

  report.flat_train = OverallFlatAccuracy(e.train, lexicon, e.models, config.threads);
  const AnnotatedCorpus &held_out = e.test.UtteranceCount() > 0 ? e.test : e.train;
  report.ablation = AblationExperiment(held_out, lexicon, e.models, config.ablation_fractions,
                                       config.ablation_seeds, config.threads);
  report.flat_test = report.ablation.front().score;
  report.curves = SrnVsNgramReport(e.train, held_out, e.models, config.threads);

  const auto graphs = BuildLattices(held_out, config.grammar.noise, lexicon, config.lattices,
                                    config.grammar.noise.seed);
  for (KnowledgeMode mode : {KnowledgeMode::kAcoustic, KnowledgeMode::kAcousticSyntax,
                             KnowledgeMode::kFull}) {
    DecoderConfig decoder = config.decoder;
    decoder.knowledge = mode;
    decoder.threads = config.threads;
    report.mrr.push_back(GoldPathMrr(graphs, lexicon, e.models, decoder));
  }
  return report;
}

std::string EvalReport::ToJson() const {
  Json out;
  // Thread count is deliberately absent so reports compare across runs.
  out["config"] = {
      {"utterances", config.utterances},
      {"seed", config.seed},
      {"fixture_repeats", config.fixture_repeats},
      {"unknown_rate", config.unknown_rate},
      {"training",
       {{"epochs", config.training.epochs},
        {"learning_rate", config.training.learning_rate},
        {"hidden_units", config.training.hidden_units}}},
      {"decoder",
       {{"beam_width", config.decoder.beam_width},
        {"gap", config.decoder.gap},
        {"ranking", std::string(RankingName(config.decoder.ranking))}}},
      {"lattices", config.lattices},
  };
  out["corpus"] = {{"train_turns", train_turns},   {"test_turns", test_turns},
                   {"train_utterances", train_utterances},
                   {"test_utterances", test_utterances},
                   {"train_tokens", train_tokens}, {"test_tokens", test_tokens}};
  Json nets = Json::array();
  for (const auto &n : networks) {
    nets.push_back({{"name", std::string(NetName(n.id))},
                    {"untrained_train", n.untrained_train},
                    {"train", n.train},
                    {"test", n.test}});
  }
  out["networks"] = std::move(nets);
  out["flat_accuracy"] = {{"train", FlatJson(flat_train)}, {"test", FlatJson(flat_test)}};
  Json ablation_rows = Json::array();
  for (const auto &row : ablation) {
    ablation_rows.push_back({{"fraction", row.fraction},
                             {"seed", row.seed},
                             {"removed", row.removed},
                             {"syn", row.score.syn()},
                             {"sem", row.score.sem()},
                             {"syn_drop", row.syn_drop},
                             {"sem_drop", row.sem_drop}});
  }
  out["ablation"] = std::move(ablation_rows);
  Json curves_json = Json::object();
  for (const auto &report : curves) {
    Json entries = Json::array();
    for (size_t i = 0; i < report.names.size(); ++i) {
      entries.push_back({{"name", report.names[i]},
                         {"mean", report.curves[i].Mean()},
                         {"positions", report.curves[i].positions},
                         {"accuracy", report.curves[i].accuracy}});
    }
    curves_json[std::string(AxisName(report.axis))] = std::move(entries);
  }
  out["exclusion_curves"] = std::move(curves_json);
  Json mrr_json = Json::array();
  for (const auto &m : mrr) {
    mrr_json.push_back({{"knowledge", std::string(KnowledgeName(m.mode))},
                        {"mrr", m.mrr},
                        {"graphs", m.graphs},
                        {"found", m.found}});
  }
  out["gold_path_mrr"] = std::move(mrr_json);
  Json reference = Json::object();
  for (const auto &r : kReferenceAccuracies) reference[std::string(r.name)] = r.value;
  out["reference"] = std::move(reference);
  return out.dump(2) + "\n";
}

}  // namespace flatscreen
