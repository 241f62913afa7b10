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

// Incremental construction, scoring and n-best pruning of word hypothesis
// sequences over a word graph.
//
// The decoder visits the distinct start times of the graph in order. At each
// one it extends every beam sequence by the hypotheses starting there, opens
// fresh sequences at entry hypotheses, drops dead ends, records sequences
// that reach the graph end and keeps the best `beam_width` live sequences.
//
// The acoustic factor of a step is the hypothesis plausibility divided by
// the largest plausibility among all hypotheses connectable from the same
// predecessor (or among the entry hypotheses for a first word), so a path's
// score depends only on the path itself.

#ifndef FLATSCREEN_DECODER_H_
#define FLATSCREEN_DECODER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatscreen/correction.h"
#include "flatscreen/lexicon.h"
#include "flatscreen/models.h"
#include "flatscreen/predictor.h"
#include "flatscreen/tagger.h"
#include "flatscreen/word_graph.h"

namespace flatscreen {

// Which knowledge sources enter the step score; disabled factors are 1.
enum class KnowledgeMode { kAcoustic, kAcousticSyntax, kFull };

std::string_view KnowledgeName(KnowledgeMode mode);
std::optional<KnowledgeMode> KnowledgeFromName(std::string_view name);

struct DecoderConfig {
  size_t beam_width = 10;
  Centis gap = 3;  // connection tolerance in centiseconds
  RankingMode ranking = RankingMode::kNormalized;
  KnowledgeMode knowledge = KnowledgeMode::kFull;
  size_t threads = 1;
  bool apply_corrections = true;
  bool record_trace = false;

  // beam_width >= 1, gap >= 1 centisecond, threads >= 1.
  void Validate() const;
};

struct SequenceState {
  uint64_t id = 0;
  std::vector<size_t> hypotheses;  // graph indices
  TaggerState tagger;
  PredictorState predictor;
  SequenceScore score;
  std::vector<TokenAnnotation> annotations;

  std::vector<std::string> Words(const WordGraph &graph) const;
};

// Strict "ranks before" order: higher key, then fewer words, earlier end,
// lexicographically smaller word strings, smaller id.
bool RanksBefore(const SequenceState &a, const SequenceState &b,
                 const WordGraph &graph, RankingMode mode);

struct TraceEntry {
  uint64_t id = 0;
  std::vector<std::string> words;
  double score = 0.0;  // normalized or raw per the ranking mode
};

struct TraceStep {
  Centis frontier = 0;
  size_t created = 0;
  std::vector<uint64_t> completed;
  std::vector<uint64_t> dead_ends;
  std::vector<uint64_t> pruned;
  std::vector<TraceEntry> beam;
};

struct DecodedSequence {
  SequenceState state;
  CorrectionResult corrections;  // empty when corrections are disabled
};

struct DecodeResult {
  // Complete sequences in rank order.
  std::vector<DecodedSequence> ranked;
  // Filled only when nothing reached the graph end: the sequences that got
  // furthest, in rank order.
  std::vector<SequenceState> longest_partials;
  std::vector<TraceStep> trace;

  bool complete() const { return !ranked.empty(); }
};

// Reusable per-graph data: successor lists and acoustic normalizers.
class DecoderContext {
 public:
  DecoderContext(const WordGraph &graph, const Lexicon &lexicon,
                 const Models &models, const DecoderConfig &config);

  const WordGraph &graph() const { return graph_; }
  const Lexicon &lexicon() const { return lexicon_; }
  const Models &models() const { return models_; }
  const DecoderConfig &config() const { return config_; }

  const std::vector<size_t> &successors(size_t index) const { return successors_[index]; }
  const std::vector<size_t> &entries() const { return entries_; }

  // Normalized acoustic factor of `next` after `previous` (nullopt for a
  // first word).
  double AcousticFactor(std::optional<size_t> previous, size_t next) const;

 private:
  const WordGraph &graph_;
  const Lexicon &lexicon_;
  const Models &models_;
  DecoderConfig config_;
  std::vector<std::vector<size_t>> successors_;
  std::vector<double> successor_max_;
  std::vector<size_t> entries_;
  double entry_max_ = 1.0;
};

// Appends one hypothesis to a sequence: tagging (or inline pause and
// interjection marking), prediction and step scoring.
SequenceState ExtendSequence(const DecoderContext &context,
                             const SequenceState *parent, size_t hypothesis,
                             uint64_t id);

struct Beam {
  std::vector<SequenceState> live;       // rank order
  std::vector<SequenceState> completed;  // creation order
  // Dead ends that got furthest in time, kept for the no-path diagnosis.
  std::vector<SequenceState> furthest_dead;
  Centis furthest_end = -1;
  uint64_t next_id = 1;
};

// One frontier step; see the file comment.
Beam Advance(Beam beam, const DecoderContext &context, Centis frontier,
             TraceStep *trace);

// Throws Error on an empty graph.
DecodeResult Decode(const WordGraph &graph, const Lexicon &lexicon,
                    const Models &models, const DecoderConfig &config);

std::string DecodeResultToJson(const DecodeResult &result,
                               const WordGraph &graph, RankingMode mode,
                               bool include_trace);

}  // namespace flatscreen

#endif  // FLATSCREEN_DECODER_H_
