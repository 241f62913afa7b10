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

// Evaluation metrics and the experiment runner behind `flatscreen eval`.

#ifndef FLATSCREEN_HARNESS_H_
#define FLATSCREEN_HARNESS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "flatscreen/corpus.h"
#include "flatscreen/decoder.h"
#include "flatscreen/lexicon.h"
#include "flatscreen/models.h"
#include "flatscreen/ngram.h"
#include "flatscreen/synthetic.h"
#include "flatscreen/tagger.h"
#include "flatscreen/training.h"

namespace flatscreen {

// Accuracies reported for the original meeting corpus; printed next to
// the desk-scale numbers, never asserted.
struct ReferenceAccuracy {
  std::string_view name;
  double value;
};
inline constexpr std::array<ReferenceAccuracy, 13> kReferenceAccuracies = {{
    {"BAS-SYN-DIS", 0.89},
    {"BAS-SEM-DIS", 0.86},
    {"ABS-SYN-CAT", 0.84},
    {"ABS-SEM-CAT", 0.83},
    {"PHRASE-START", 0.90},
    {"WORD-ERROR", 0.94},
    {"PHRASE-ERROR", 0.98},
    {"flat-syn", 0.74},
    {"flat-sem", 0.72},
    {"flat-syn-ablated-5", 0.72},
    {"flat-sem-ablated-5", 0.67},
    {"flat-syn-ablated-10", 0.70},
    {"flat-sem-ablated-10", 0.67},
}};

struct ExperimentConfig {
  size_t utterances = 400;
  uint64_t seed = 1;
  size_t fixture_repeats = 3;
  GrammarConfig grammar;
  // Desk-scale regime; see README.
  TrainingConfig training{500, 0.1, 14, 1};
  // Unknown-word augmentation of the disambiguation sets.
  double unknown_rate = 0.3;
  DecoderConfig decoder;
  size_t lattices = 60;
  std::vector<double> ablation_fractions{0.05, 0.10};
  std::vector<uint64_t> ablation_seeds{1, 2, 3};
  size_t threads = 1;

  void Validate() const;
};

// JSON object whose keys mirror the struct fields; absent keys keep their
// defaults, unknown keys are an error.
ExperimentConfig ParseExperimentConfig(std::string_view json, const std::string &source);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path &path);

// Argmax accuracy with contexts reset per sequence. Throws Error on an
// empty dataset and DimensionError on a shape mismatch.
double NetworkAccuracy(const Network &network, const SequenceDataset &dataset);

// Tagging plus corrections of a transcript.
std::vector<TokenAnnotation> AnalyzeTranscript(std::span<const std::string> words,
                                               const Lexicon &lexicon,
                                               const Models &models);

struct FlatScore {
  size_t phrases = 0;
  size_t syn_correct = 0;
  size_t sem_correct = 0;

  double syn() const { return phrases ? static_cast<double>(syn_correct) / phrases : 0.0; }
  double sem() const { return phrases ? static_cast<double>(sem_correct) / phrases : 0.0; }
  FlatScore &operator+=(const FlatScore &other);
  bool operator==(const FlatScore &) const = default;
};

// A gold phrase is correct on an axis when the system has a phrase with
// the same surviving token indices and the same abstract label. Token
// streams of different length never abort; unmatched phrases just fail.
FlatScore ScoreFlatPhrases(std::span<const TokenAnnotation> system,
                           const Utterance &gold);

FlatScore OverallFlatAccuracy(const AnnotatedCorpus &corpus, const Lexicon &lexicon,
                              const Models &models, size_t threads = 1);

struct AblationRow {
  double fraction = 0.0;
  uint64_t seed = 0;
  size_t removed = 0;
  FlatScore score;
  double syn_drop = 0.0;  // baseline minus ablated, in [-1, 1]
  double sem_drop = 0.0;
};

// One row per (fraction, seed); fraction 0 is the baseline and is always
// the first row.
std::vector<AblationRow> AblationExperiment(const AnnotatedCorpus &corpus,
                                            const Lexicon &lexicon,
                                            const Models &models,
                                            std::span<const double> fractions,
                                            std::span<const uint64_t> seeds,
                                            size_t threads = 1);

// Gold label sequences of the prediction stream on one axis.
std::vector<LabelSequence> GoldLabelSequences(const AnnotatedCorpus &corpus, Axis axis);

struct CurveReport {
  Axis axis = Axis::kBasicSyn;
  std::vector<std::string> names;  // "SRN", "1-gram" .. "5-gram"
  std::vector<ExclusionCurve> curves;
};

// Exclusion curves of the prediction network and the 1..5-gram models
// fitted on `train`, evaluated on `test`, for both basic axes.
std::array<CurveReport, 2> SrnVsNgramReport(const AnnotatedCorpus &train,
                                            const AnnotatedCorpus &test,
                                            const Models &models,
                                            size_t threads = 1);

// Mean wall time of one prediction-network forward step, in seconds.
double ForwardStepSeconds(const Network &network, size_t iterations);

struct MrrResult {
  KnowledgeMode mode = KnowledgeMode::kFull;
  double mrr = 0.0;
  size_t graphs = 0;
  size_t found = 0;  // graphs whose gold path survived to the final list
};

// Word graphs for the first `count` utterances of `corpus` (cycling when
// there are fewer), with seeds derived from `seed`.
std::vector<SynthGraph> BuildLattices(const AnnotatedCorpus &corpus,
                                      const NoiseConfig &noise,
                                      const Lexicon &lexicon, size_t count,
                                      uint64_t seed);

// 1 / rank of the gold path among the complete sequences, 0 if absent.
double GoldPathReciprocalRank(const DecodeResult &result, const SynthGraph &graph);

MrrResult GoldPathMrr(std::span<const SynthGraph> graphs, const Lexicon &lexicon,
                      const Models &models, DecoderConfig config);

struct NetworkScore {
  NetId id;
  double untrained_train = 0.0;
  double train = 0.0;
  double test = 0.0;
};

struct EvalReport {
  ExperimentConfig config;
  size_t train_turns = 0, test_turns = 0;
  size_t train_utterances = 0, test_utterances = 0;
  size_t train_tokens = 0, test_tokens = 0;
  std::vector<NetworkScore> networks;
  FlatScore flat_train;
  FlatScore flat_test;
  std::vector<AblationRow> ablation;
  std::array<CurveReport, 2> curves;
  std::vector<MrrResult> mrr;

  std::string ToJson() const;
};

struct Experiment {
  AnnotatedCorpus corpus;
  AnnotatedCorpus train;
  AnnotatedCorpus test;
  TrainingSets train_sets;
  TrainingSets test_sets;
  Models models;
};

// Builds the corpus, derives training sets and trains every network.
Experiment PrepareExperiment(const ExperimentConfig &config, const Lexicon &lexicon);

// Every metric above on a prepared experiment. Byte-identical JSON for a
// fixed config regardless of the thread count.
EvalReport Evaluate(const Experiment &experiment, const ExperimentConfig &config,
                    const Lexicon &lexicon);

}  // namespace flatscreen

#endif  // FLATSCREEN_HARNESS_H_
