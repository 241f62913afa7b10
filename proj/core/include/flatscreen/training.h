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

// Per-network training sets derived from gold-annotated utterances, and
// training of the full network set.
//
// The category networks see the token stream without pauses and
// interjections (they never reach the taggers at run time) but with repair
// tokens, which do. The prediction networks learn fluent word order and
// skip repair tokens as well. Each utterance is one sequence, so recurrent
// contexts reset at utterance starts.

#ifndef FLATSCREEN_TRAINING_H_
#define FLATSCREEN_TRAINING_H_

#include <array>
#include <cstdint>
#include <vector>

#include "flatscreen/corpus.h"
#include "flatscreen/lexicon.h"
#include "flatscreen/models.h"
#include "flatscreen/network.h"

namespace flatscreen {

struct TrainingSets {
  std::array<SequenceDataset, kNetCount> sets;

  SequenceDataset &operator[](NetId id) { return sets[static_cast<size_t>(id)]; }
  const SequenceDataset &operator[](NetId id) const {
    return sets[static_cast<size_t>(id)];
  }
};

// Tokens fed to the category networks: everything but pauses and
// interjections.
std::vector<const AnnotatedToken *> TaggerStream(const Utterance &utterance);

// Tokens the prediction networks learn from: the tagger stream without
// word and phrase repairs.
std::vector<const AnnotatedToken *> PredictionStream(const Utterance &utterance);

// Binary (lexical, syntactic, semantic) equality features of two tokens.
std::array<double, 3> WordPairFeatures(const AnnotatedToken &a,
                                       const AnnotatedToken &b);

struct DeriveOptions {
  // When positive, the disambiguation sets get one extra copy of every
  // utterance in which each word is replaced by the unknown-word default
  // vectors with this probability.
  double unknown_rate = 0.0;
  // Adds a graded copy of every equality pattern (label value in [0.6, 1],
  // others in [0, 0.1]) so the equality nets accept tagger output.
  bool soft_equality = true;
  uint64_t seed = 1;
};

// Uses every utterance of `corpus`; pass a split subset to train on one
// split. Throws Error when the corpus has no utterances.
TrainingSets DeriveTrainingSets(const AnnotatedCorpus &corpus,
                                const Lexicon &lexicon,
                                const DeriveOptions &options = {});

struct ModelTrainingConfig {
  TrainingConfig base;  // hidden_units applies to all but the error nets
  size_t threads = 1;
};

struct ModelTrainingResult {
  Models models;
  std::array<std::vector<double>, kNetCount> loss_history;
};

// Trains every network from NetSeed(base.seed, id). Networks train in
// parallel; results do not depend on the thread count.
ModelTrainingResult TrainModels(const TrainingSets &sets,
                                const ModelTrainingConfig &config);

}  // namespace flatscreen

#endif  // FLATSCREEN_TRAINING_H_
