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

// Synthetic meeting-domain utterances with gold annotations, and noisy word
// graphs built around them.
//
// Utterances come from a template grammar. A template is a list of phrase
// names; "?NAME" is optional and "A|B" picks one alternative. Every phrase
// carries its abstract labels, every word its basic labels, so gold
// annotation is complete by construction.

#ifndef FLATSCREEN_SYNTHETIC_H_
#define FLATSCREEN_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "flatscreen/corpus.h"
#include "flatscreen/lexicon.h"
#include "flatscreen/word_graph.h"

namespace flatscreen {

struct NoiseConfig {
  // Per-utterance probabilities of one disfluency of each kind.
  double interjection_rate = 0.25;
  double repetition_rate = 0.15;
  double substitution_rate = 0.1;
  double restart_rate = 0.1;
  // Fraction of tokens that get competing hypotheses in a word graph.
  double confusion_rate = 0.6;
  // Mean hypotheses per spoken token.
  double hypotheses_per_word = 6.3;
  uint64_t seed = 1;

  // Rates in [0, 1], hypotheses_per_word >= 1.
  void Validate() const;
};

struct GrammarConfig {
  // Sentence templates; empty selects the built-in meeting grammar.
  std::vector<std::string> templates;
  size_t min_utterances_per_turn = 1;
  size_t max_utterances_per_turn = 3;
  // Every `train_every`-th turn is a training turn (1/3 train by default).
  size_t train_every = 3;
  NoiseConfig noise;
};

const std::vector<std::string> &DefaultTemplates();

// Phrase names usable in templates.
std::vector<std::string> PhraseNames();

// `utterances` utterances grouped into turns "syn-NNNN". Deterministic per
// seed. Throws Error on an unknown phrase name or utterances == 0.
AnnotatedCorpus GenerateSynthetic(const GrammarConfig &config,
                                  size_t utterances, uint64_t seed);

// Synthetic corpus plus the fixture turns, the latter repeated
// `fixture_repeats` times (ids "fx-...-rN" after the first copy).
AnnotatedCorpus BuildExperimentCorpus(const GrammarConfig &config,
                                      size_t utterances, uint64_t seed,
                                      size_t fixture_repeats);

struct SynthGraph {
  WordGraph graph;
  // Graph indices of the spoken tokens, in order.
  std::vector<size_t> gold_path;
};

// Word graph for one utterance. Every token becomes a gold hypothesis;
// competing hypotheses (random lexicon words on the same, jittered, split
// or merged spans) are added until the density reaches the target.
// Throws Error on an empty utterance.
SynthGraph SynthWordGraph(const Utterance &utterance, const NoiseConfig &noise,
                          const Lexicon &lexicon, uint64_t seed);

// Hypotheses per spoken token.
double HypothesisDensity(const SynthGraph &graph);

}  // namespace flatscreen

#endif  // FLATSCREEN_SYNTHETIC_H_
