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

// Incremental flat tagging: basic category disambiguation, abstract
// categorization and phrase-start detection, one word at a time.

#ifndef FLATSCREEN_TAGGER_H_
#define FLATSCREEN_TAGGER_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatscreen/category.h"
#include "flatscreen/corpus.h"
#include "flatscreen/lexicon.h"
#include "flatscreen/models.h"

namespace flatscreen {

// Combined phrase-start value at or above which a word opens a phrase.
inline constexpr double kPhraseStartThreshold = 0.5;

struct TokenAnnotation {
  std::string word;
  bool known = true;
  CategoryVector basic_syn{Axis::kBasicSyn};
  CategoryVector abs_syn{Axis::kAbsSyn};
  CategoryVector basic_sem{Axis::kBasicSem};
  CategoryVector abs_sem{Axis::kAbsSem};
  double phrase_start = 0.0;
  DeletionReason deleted = DeletionReason::kNone;

  const CategoryVector &vector(Axis axis) const;
  size_t label(Axis axis) const { return vector(axis).Argmax(); }
  const std::string &label_name(Axis axis) const {
    return vector(axis).ArgmaxLabel();
  }
  bool is_deleted() const { return deleted != DeletionReason::kNone; }
  bool starts_phrase() const { return phrase_start >= kPhraseStartThreshold; }

  bool operator==(const TokenAnnotation &) const = default;
};

// Recurrent contexts of the five category networks.
struct TaggerState {
  std::array<std::vector<double>, 5> contexts;
  size_t position = 0;

  bool operator==(const TaggerState &) const = default;
};

TaggerState InitialTaggerState(const Models &models);

// `axis` is kBasicSyn or kBasicSem and must match `ambiguous`.
CategoryVector Disambiguate(Axis axis, TaggerState &state,
                            const Models &models,
                            const CategoryVector &ambiguous);

// Maps a disambiguated basic vector (kBasicSyn or kBasicSem) to its
// abstract axis.
CategoryVector AbstractMap(Axis basic_axis, TaggerState &state,
                           const Models &models,
                           const CategoryVector &disambiguated);

// Combined two-unit boundary value; the first word of an utterance always
// gets 1.
double PhraseStart(TaggerState &state, const Models &models,
                   const CategoryVector &disambiguated_syn);

// One full tagging step; advances every context and the position.
TokenAnnotation TagWord(const Lexicon &lexicon, const Models &models,
                        TaggerState &state, std::string_view word);

// Tags left to right from a fresh state.
std::vector<TokenAnnotation> TagSequence(const Lexicon &lexicon,
                                         const Models &models,
                                         std::span<const std::string> words);

// Re-tags the surviving tokens in order from a fresh state; deleted tokens
// keep their annotations and do not advance any context.
void RetagSurvivors(const Lexicon &lexicon, const Models &models,
                    std::vector<TokenAnnotation> &annotations);

struct Phrase {
  std::vector<size_t> tokens;  // indices into the annotation list
  size_t abs_syn = 0;          // argmax of the first token
  size_t abs_sem = 0;          // argmax of the last token

  bool operator==(const Phrase &) const = default;
};

// Partitions the surviving tokens at boundaries. The first surviving token
// always opens a phrase. Throws Error on an empty list.
std::vector<Phrase> FinalizePhrases(std::span<const TokenAnnotation> annotations);

// Structured dump: one JSON object per token.
std::string AnnotationsToJson(std::span<const TokenAnnotation> annotations);

}  // namespace flatscreen

#endif  // FLATSCREEN_TAGGER_H_
