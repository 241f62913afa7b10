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

#include "flatscreen/tagger.h"

#include "json.hpp"

#include "flatscreen/error.h"

namespace flatscreen {
namespace {

enum Slot { kSynDis = 0, kSemDis, kSynCat, kSemCat, kStart };

constexpr std::array<NetId, 5> kSlotNets = {
    NetId::kBasSynDis, NetId::kBasSemDis, NetId::kAbsSynCat,
    NetId::kAbsSemCat, NetId::kPhraseStart};

std::vector<double> Step(const Models &models, TaggerState &state, Slot slot,
                         std::span<const double> input) {
  const Network &net = models.net(kSlotNets[slot]);
  auto activation = net.Forward(input, state.contexts[slot]);
  state.contexts[slot] = std::move(activation.hidden);
  return std::move(activation.output);
}

}  // namespace

const CategoryVector &TokenAnnotation::vector(Axis axis) const {
  switch (axis) {
    case Axis::kBasicSyn: return basic_syn;
    case Axis::kAbsSyn: return abs_syn;
    case Axis::kBasicSem: return basic_sem;
    case Axis::kAbsSem: return abs_sem;
  }
  throw Error("unknown axis");
}

TaggerState InitialTaggerState(const Models &models) {
  TaggerState state;
  for (size_t i = 0; i < kSlotNets.size(); ++i) {
    state.contexts[i] = models.net(kSlotNets[i]).InitialContext();
  }
  return state;
}

CategoryVector Disambiguate(Axis axis, TaggerState &state,
                            const Models &models,
                            const CategoryVector &ambiguous) {
  if (axis != Axis::kBasicSyn && axis != Axis::kBasicSem) {
    throw DimensionError("disambiguation works on basic axes only");
  }
  if (ambiguous.axis() != axis) {
    throw DimensionError("disambiguation input is on the wrong axis");
  }
  Slot slot = axis == Axis::kBasicSyn ? kSynDis : kSemDis;
  return CategoryVector(axis, Step(models, state, slot, ambiguous.values()));
}

CategoryVector AbstractMap(Axis basic_axis, TaggerState &state,
                           const Models &models,
                           const CategoryVector &disambiguated) {
  if (basic_axis != Axis::kBasicSyn && basic_axis != Axis::kBasicSem) {
    throw DimensionError("abstract mapping starts from a basic axis");
  }
  if (disambiguated.axis() != basic_axis) {
    throw DimensionError("abstract mapping input is on the wrong axis");
  }
  const bool syn = basic_axis == Axis::kBasicSyn;
  return CategoryVector(syn ? Axis::kAbsSyn : Axis::kAbsSem,
                        Step(models, state, syn ? kSynCat : kSemCat,
                             disambiguated.values()));
}

double PhraseStart(TaggerState &state, const Models &models,
                   const CategoryVector &disambiguated_syn) {
  if (disambiguated_syn.axis() != Axis::kBasicSyn) {
    throw DimensionError("phrase start reads a basic syntactic vector");
  }
  auto out = Step(models, state, kStart, disambiguated_syn.values());
  if (state.position == 0) return 1.0;
  return CombineTwoUnitOutput(out[0], out[1]);
}

TokenAnnotation TagWord(const Lexicon &lexicon, const Models &models,
                        TaggerState &state, std::string_view word) {
  LookupResult lookup = lexicon.Lookup(word);
  TokenAnnotation annotation;
  annotation.word = std::string(word);
  annotation.known = lookup.known;
  annotation.basic_syn = Disambiguate(Axis::kBasicSyn, state, models, lookup.syn);
  annotation.basic_sem = Disambiguate(Axis::kBasicSem, state, models, lookup.sem);
  annotation.abs_syn = AbstractMap(Axis::kBasicSyn, state, models, annotation.basic_syn);
  annotation.abs_sem = AbstractMap(Axis::kBasicSem, state, models, annotation.basic_sem);
  annotation.phrase_start = PhraseStart(state, models, annotation.basic_syn);
  ++state.position;
  return annotation;
}

std::vector<TokenAnnotation> TagSequence(const Lexicon &lexicon,
                                         const Models &models,
                                         std::span<const std::string> words) {
  TaggerState state = InitialTaggerState(models);
  std::vector<TokenAnnotation> out;
  out.reserve(words.size());
  for (const auto &word : words) out.push_back(TagWord(lexicon, models, state, word));
  return out;
}

void RetagSurvivors(const Lexicon &lexicon, const Models &models,
                    std::vector<TokenAnnotation> &annotations) {
  TaggerState state = InitialTaggerState(models);
  for (auto &annotation : annotations) {
    if (annotation.is_deleted()) continue;
    TokenAnnotation fresh = TagWord(lexicon, models, state, annotation.word);
    fresh.deleted = annotation.deleted;
    annotation = std::move(fresh);
  }
}

std::vector<Phrase> FinalizePhrases(std::span<const TokenAnnotation> annotations) {
  if (annotations.empty()) throw Error("cannot finalize phrases of an empty sequence");
  std::vector<Phrase> phrases;
  for (size_t i = 0; i < annotations.size(); ++i) {
    const auto &token = annotations[i];
    if (token.is_deleted()) continue;
    if (phrases.empty() || token.starts_phrase()) {
      Phrase phrase;
      phrase.abs_syn = token.label(Axis::kAbsSyn);
      phrases.push_back(std::move(phrase));
    }
    phrases.back().tokens.push_back(i);
    phrases.back().abs_sem = token.label(Axis::kAbsSem);
  }
  return phrases;
}

std::string AnnotationsToJson(std::span<const TokenAnnotation> annotations) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto &token : annotations) {
    nlohmann::ordered_json record;
    record["word"] = token.word;
    record["known"] = token.known;
    for (Axis axis : kAllAxes) {
      record[std::string(AxisName(axis))] = token.label_name(axis);
    }
    record["phrase_start"] = token.phrase_start;
    record["deleted"] = std::string(DeletionReportName(token.deleted));
    nlohmann::ordered_json vectors;
    for (Axis axis : kAllAxes) {
      auto values = token.vector(axis).values();
      vectors[std::string(AxisName(axis))] =
          std::vector<double>(values.begin(), values.end());
    }
    record["vectors"] = std::move(vectors);
    out.push_back(std::move(record));
  }
  return out.dump(2);
}

}  // namespace flatscreen
