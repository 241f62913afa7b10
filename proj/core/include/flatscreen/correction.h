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

// Pause and interjection elimination plus learned word and phrase repair
// detection. Tokens are only ever marked as deleted, never removed.

#ifndef FLATSCREEN_CORRECTION_H_
#define FLATSCREEN_CORRECTION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatscreen/lexicon.h"
#include "flatscreen/models.h"
#include "flatscreen/tagger.h"

namespace flatscreen {

// Decision threshold on the combined two-unit output of the error nets.
inline constexpr double kRepairThreshold = 0.5;

struct EqualityPreferences {
  double lexical = 0.0;  // exactly 0 or 1
  double syntactic = 0.0;
  double semantic = 0.0;

  bool operator==(const EqualityPreferences &) const = default;
};

// True for the reserved pause token and for known words whose syntactic
// membership includes the interjection label.
bool DetectPauseOrInterjection(std::string_view word, const LookupResult &entry);

// Lexical equality compares case-folded word forms.
EqualityPreferences WordEquality(std::string_view w1, std::string_view w2,
                                 const TokenAnnotation &a1,
                                 const TokenAnnotation &a2,
                                 const Models &models);

// Combined output of WORD-ERROR or PHRASE-ERROR for a preference triple.
double RepairScore(NetId net, const EqualityPreferences &prefs,
                   const Models &models);

bool DecideWordError(const EqualityPreferences &prefs, const Models &models);

// Compares two adjacent finalized phrases: lexical equality of their first
// words, ABS-SYN-EQ over the first words' abstract syntactic vectors and
// ABS-SEM-EQ over the last words' abstract semantic vectors.
EqualityPreferences PhraseEquality(const Phrase &p1, const Phrase &p2,
                                   std::span<const TokenAnnotation> annotations,
                                   const Models &models);

bool DecidePhraseError(const EqualityPreferences &prefs, const Models &models);

struct RepairDecision {
  enum class Kind { kWord, kPhrase };

  Kind kind = Kind::kWord;
  std::vector<size_t> deleted;   // token indices of the reparandum
  size_t repair_start = 0;       // first token of the repairing material
  EqualityPreferences prefs;
  double score = 0.0;

  bool operator==(const RepairDecision &) const = default;
};

// One entry per marked token.
struct RepairRecord {
  size_t token = 0;
  DeletionReason reason = DeletionReason::kNone;
  std::optional<EqualityPreferences> prefs;  // absent for pauses/interjections
  double score = 1.0;

  bool operator==(const RepairRecord &) const = default;
};

struct CorrectionResult {
  std::vector<TokenAnnotation> annotations;
  std::vector<RepairRecord> repairs;        // in marking order
  std::vector<RepairDecision> decisions;    // word and phrase repairs

  bool operator==(const CorrectionResult &) const = default;
};

// Pause/interjection marking, a left-to-right word-repair pass, re-tagging
// of the survivors, phrase finalization and a phrase-repair pass; the whole
// pipeline repeats until no further token is marked. Existing marks are
// kept.
CorrectionResult ApplyCorrections(std::vector<TokenAnnotation> annotations,
                                  const Lexicon &lexicon, const Models &models);

std::string RepairsToJson(std::span<const RepairRecord> repairs);

}  // namespace flatscreen

#endif  // FLATSCREEN_CORRECTION_H_
