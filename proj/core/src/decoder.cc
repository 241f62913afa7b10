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

#include "flatscreen/decoder.h"

#include <algorithm>

#include "json.hpp"

#include "flatscreen/error.h"
#include "flatscreen/parallel.h"

namespace flatscreen {

std::string_view KnowledgeName(KnowledgeMode mode) {
  switch (mode) {
    case KnowledgeMode::kAcoustic: return "acoustic";
    case KnowledgeMode::kAcousticSyntax: return "acoustic_syn";
    case KnowledgeMode::kFull: return "full";
  }
  return "?";
}

std::optional<KnowledgeMode> KnowledgeFromName(std::string_view name) {
  for (auto mode : {KnowledgeMode::kAcoustic, KnowledgeMode::kAcousticSyntax,
                    KnowledgeMode::kFull}) {
    if (KnowledgeName(mode) == name) return mode;
  }
  return std::nullopt;
}

void DecoderConfig::Validate() const {
  if (beam_width < 1) throw Error("beam width must be at least 1");
  if (gap < 1) throw Error("connection gap must be at least 0.01 s");
  if (threads < 1) throw Error("thread count must be at least 1");
}

std::vector<std::string> SequenceState::Words(const WordGraph &graph) const {
  std::vector<std::string> words;
  words.reserve(hypotheses.size());
  for (size_t h : hypotheses) words.push_back(graph[h].word);
  return words;
}

bool RanksBefore(const SequenceState &a, const SequenceState &b,
                 const WordGraph &graph, RankingMode mode) {
  const double ka = a.score.RankKey(mode);
  const double kb = b.score.RankKey(mode);
  if (ka != kb) return ka > kb;
  if (a.hypotheses.size() != b.hypotheses.size()) {
    return a.hypotheses.size() < b.hypotheses.size();
  }
  const Centis ea = graph[a.hypotheses.back()].end;
  const Centis eb = graph[b.hypotheses.back()].end;
  if (ea != eb) return ea < eb;
  for (size_t i = 0; i < a.hypotheses.size(); ++i) {
    const std::string &wa = graph[a.hypotheses[i]].word;
    const std::string &wb = graph[b.hypotheses[i]].word;
    if (wa != wb) return wa < wb;
  }
  return a.id < b.id;
}

DecoderContext::DecoderContext(const WordGraph &graph, const Lexicon &lexicon,
                               const Models &models, const DecoderConfig &config)
    : graph_(graph), lexicon_(lexicon), models_(models), config_(config) {
  config_.Validate();
  successors_.resize(graph.size());
  successor_max_.assign(graph.size(), 0.0);
  for (size_t i = 0; i < graph.size(); ++i) {
    successors_[i] = graph.Successors(i, config_.gap);
    for (size_t j : successors_[i]) {
      successor_max_[i] = std::max(successor_max_[i], graph[j].plausibility);
    }
  }
  entries_ = graph.EntryPoints(config_.gap);
  entry_max_ = 0.0;
  for (size_t e : entries_) entry_max_ = std::max(entry_max_, graph[e].plausibility);
}

double DecoderContext::AcousticFactor(std::optional<size_t> previous,
                                      size_t next) const {
  const double max = previous ? successor_max_[*previous] : entry_max_;
  return graph_[next].plausibility / max;
}

SequenceState ExtendSequence(const DecoderContext &context,
                             const SequenceState *parent, size_t hypothesis,
                             uint64_t id) {
  SequenceState child;
  if (parent) {
    child = *parent;
  } else {
    child.tagger = InitialTaggerState(context.models());
    child.predictor = InitialPredictorState(context.models());
  }
  child.id = id;
  std::optional<size_t> previous;
  if (!child.hypotheses.empty()) previous = child.hypotheses.back();
  child.hypotheses.push_back(hypothesis);

  const std::string &word = context.graph()[hypothesis].word;
  const double acoustic = context.AcousticFactor(previous, hypothesis);
  const Lexicon &lexicon = context.lexicon();
  const Models &models = context.models();

  if (DetectPauseOrInterjection(word, lexicon.Lookup(word))) {
    // Annotated for display only; no context moves.
    TaggerState scratch = child.tagger;
    TokenAnnotation annotation = TagWord(lexicon, models, scratch, word);
    annotation.deleted =
        word == kPauseToken ? DeletionReason::kPause : DeletionReason::kInterjection;
    child.annotations.push_back(std::move(annotation));
    child.score.Append(MakeStepScore(acoustic, 1.0, 1.0));
    return child;
  }

  TokenAnnotation annotation = TagWord(lexicon, models, child.tagger, word);
  double syntactic = 1.0;
  double semantic = 1.0;
  const KnowledgeMode mode = context.config().knowledge;
  if (mode != KnowledgeMode::kAcoustic && child.predictor.syn_prediction) {
    syntactic = StepPlausibility(*child.predictor.syn_prediction, annotation.basic_syn);
  }
  if (mode == KnowledgeMode::kFull && child.predictor.sem_prediction) {
    semantic = StepPlausibility(*child.predictor.sem_prediction, annotation.basic_sem);
  }
  PredictNext(Axis::kBasicSyn, child.predictor, models, annotation.basic_syn);
  PredictNext(Axis::kBasicSem, child.predictor, models, annotation.basic_sem);
  child.annotations.push_back(std::move(annotation));
  child.score.Append(MakeStepScore(acoustic, syntactic, semantic));
  return child;
}

namespace {

TraceEntry MakeTraceEntry(const SequenceState &s, const WordGraph &graph,
                          RankingMode mode) {
  return {s.id, s.Words(graph),
          mode == RankingMode::kRaw ? s.score.Raw() : s.score.Normalized()};
}

void SortByRank(std::vector<SequenceState> &sequences, const WordGraph &graph,
                RankingMode mode) {
  std::sort(sequences.begin(), sequences.end(),
            [&](const SequenceState &a, const SequenceState &b) {
              return RanksBefore(a, b, graph, mode);
            });
}

}  // namespace

Beam Advance(Beam beam, const DecoderContext &context, Centis frontier,
             TraceStep *trace) {
  const WordGraph &graph = context.graph();
  const DecoderConfig &config = context.config();

  // Plan every new sequence first so ids do not depend on threading.
  struct Job {
    const SequenceState *parent;
    size_t hypothesis;
    uint64_t id;
  };
  std::vector<Job> jobs;
  for (size_t e : context.entries()) {
    if (graph[e].start == frontier) jobs.push_back({nullptr, e, beam.next_id++});
  }
  std::vector<SequenceState> candidates;
  std::vector<const SequenceState *> kept_parents;
  for (const SequenceState &parent : beam.live) {
    bool has_later = false;
    for (size_t next : context.successors(parent.hypotheses.back())) {
      if (graph[next].start == frontier) {
        jobs.push_back({&parent, next, beam.next_id++});
      } else if (graph[next].start > frontier) {
        has_later = true;
      }
    }
    if (has_later) kept_parents.push_back(&parent);
  }

  std::vector<SequenceState> children(jobs.size());
  ParallelFor(jobs.size(), config.threads, [&](size_t i) {
    children[i] = ExtendSequence(context, jobs[i].parent, jobs[i].hypothesis, jobs[i].id);
  });

  for (const SequenceState *parent : kept_parents) candidates.push_back(*parent);
  if (trace) {
    trace->frontier = frontier;
    trace->created = children.size();
  }
  for (SequenceState &child : children) {
    const size_t last = child.hypotheses.back();
    const bool reaches = graph.ReachesEnd(last, config.gap);
    const bool extendable = !context.successors(last).empty();
    if (reaches) {
      if (trace) trace->completed.push_back(child.id);
      beam.completed.push_back(child);
    }
    if (extendable) {
      candidates.push_back(std::move(child));
    } else if (!reaches) {
      if (trace) trace->dead_ends.push_back(child.id);
      const Centis end = graph[last].end;
      if (end > beam.furthest_end) {
        beam.furthest_end = end;
        beam.furthest_dead.clear();
      }
      if (end == beam.furthest_end) beam.furthest_dead.push_back(std::move(child));
    }
  }

  SortByRank(candidates, graph, config.ranking);
  if (candidates.size() > config.beam_width) {
    if (trace) {
      for (size_t i = config.beam_width; i < candidates.size(); ++i) {
        trace->pruned.push_back(candidates[i].id);
      }
    }
    candidates.resize(config.beam_width);
  }
  beam.live = std::move(candidates);
  if (trace) {
    for (const auto &s : beam.live) {
      trace->beam.push_back(MakeTraceEntry(s, graph, config.ranking));
    }
  }
  return beam;
}

DecodeResult Decode(const WordGraph &graph, const Lexicon &lexicon,
                    const Models &models, const DecoderConfig &config) {
  if (graph.empty()) throw Error("cannot decode an empty word graph");
  DecoderContext context(graph, lexicon, models, config);
  DecodeResult result;
  Beam beam;
  for (Centis frontier : graph.StartTimes()) {
    TraceStep step;
    beam = Advance(std::move(beam), context, frontier,
                   config.record_trace ? &step : nullptr);
    if (config.record_trace) result.trace.push_back(std::move(step));
  }

  SortByRank(beam.completed, graph, config.ranking);
  result.ranked.resize(beam.completed.size());
  ParallelFor(beam.completed.size(), config.threads, [&](size_t i) {
    DecodedSequence &out = result.ranked[i];
    out.state = std::move(beam.completed[i]);
    if (config.apply_corrections) {
      out.corrections = ApplyCorrections(out.state.annotations, lexicon, models);
    }
  });

  if (result.ranked.empty()) {
    std::vector<SequenceState> partials = std::move(beam.furthest_dead);
    for (auto &s : beam.live) partials.push_back(std::move(s));
    SortByRank(partials, graph, config.ranking);
    if (partials.size() > config.beam_width) partials.resize(config.beam_width);
    result.longest_partials = std::move(partials);
  }
  return result;
}

namespace {

nlohmann::ordered_json SequenceJson(const SequenceState &s, const WordGraph &graph) {
  nlohmann::ordered_json out;
  out["id"] = s.id;
  out["words"] = s.Words(graph);
  nlohmann::ordered_json hyps = nlohmann::ordered_json::array();
  for (size_t h : s.hypotheses) {
    hyps.push_back({{"start", FormatCentis(graph[h].start)},
                    {"end", FormatCentis(graph[h].end)},
                    {"word", graph[h].word},
                    {"plausibility", graph[h].plausibility}});
  }
  out["hypotheses"] = std::move(hyps);
  out["normalized"] = s.score.Normalized();
  out["raw"] = s.score.Raw();
  out["log_sum"] = s.score.log_sum();
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto &step : s.score.steps()) {
    steps.push_back({step.acoustic, step.syntactic, step.semantic, step.combined});
  }
  out["steps"] = std::move(steps);
  return out;
}

}  // namespace

std::string DecodeResultToJson(const DecodeResult &result,
                               const WordGraph &graph, RankingMode mode,
                               bool include_trace) {
  nlohmann::ordered_json out;
  out["complete"] = result.complete();
  out["ranking"] = std::string(RankingName(mode));
  nlohmann::ordered_json sequences = nlohmann::ordered_json::array();
  for (size_t rank = 0; rank < result.ranked.size(); ++rank) {
    const DecodedSequence &d = result.ranked[rank];
    nlohmann::ordered_json record = SequenceJson(d.state, graph);
    record["rank"] = rank + 1;
    const auto &annotations = d.corrections.annotations.empty()
                                  ? d.state.annotations
                                  : d.corrections.annotations;
    record["annotations"] = nlohmann::ordered_json::parse(AnnotationsToJson(annotations));
    record["repairs"] = nlohmann::ordered_json::parse(RepairsToJson(d.corrections.repairs));
    sequences.push_back(std::move(record));
  }
  out["sequences"] = std::move(sequences);
  nlohmann::ordered_json partials = nlohmann::ordered_json::array();
  for (const auto &p : result.longest_partials) partials.push_back(SequenceJson(p, graph));
  out["longest_partials"] = std::move(partials);
  if (include_trace) {
    nlohmann::ordered_json trace = nlohmann::ordered_json::array();
    for (const auto &step : result.trace) {
      nlohmann::ordered_json record;
      record["frontier"] = FormatCentis(step.frontier);
      record["created"] = step.created;
      record["completed"] = step.completed;
      record["dead_ends"] = step.dead_ends;
      record["pruned"] = step.pruned;
      nlohmann::ordered_json beam = nlohmann::ordered_json::array();
      for (const auto &entry : step.beam) {
        beam.push_back({{"id", entry.id}, {"words", entry.words}, {"score", entry.score}});
      }
      record["beam"] = std::move(beam);
      trace.push_back(std::move(record));
    }
    out["trace"] = std::move(trace);
  }
  return out.dump(2);
}

}  // namespace flatscreen
