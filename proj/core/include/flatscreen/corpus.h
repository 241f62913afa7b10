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

// Gold-annotated corpora: turns of utterances of tokens, each token carrying
// its four flat labels, a phrase-start flag and a deletion mark.
//
// File format, one token per line:
//
//   word TAB bsyn TAB absyn TAB bsem TAB absem TAB phrase_start TAB deleted
//
// where phrase_start is 0 or 1 and deleted is one of none, pause,
// interjection, word, phrase. A blank line ends an utterance and a line
// "== turn <id> <train|test>" opens a turn. Lines starting with '#' are
// comments.

#ifndef FLATSCREEN_CORPUS_H_
#define FLATSCREEN_CORPUS_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatscreen/category.h"

namespace flatscreen {

enum class DeletionReason {
  kNone,
  kPause,
  kInterjection,
  kWordRepair,
  kPhraseRepair
};

// File spelling: none, pause, interjection, word, phrase.
std::string_view DeletionName(DeletionReason reason);
std::optional<DeletionReason> DeletionFromName(std::string_view name);

// Report spelling: none, pause, interjection, word-repair, phrase-repair.
std::string_view DeletionReportName(DeletionReason reason);

struct AnnotatedToken {
  std::string word;
  // Label indices on each axis, indexed by Axis.
  std::array<size_t, 4> labels{};
  bool phrase_start = false;
  DeletionReason deleted = DeletionReason::kNone;

  size_t label(Axis axis) const { return labels[static_cast<int>(axis)]; }
  bool is_deleted() const { return deleted != DeletionReason::kNone; }

  bool operator==(const AnnotatedToken &) const = default;
};

// Builds a token from label abbreviations; throws on unknown labels.
AnnotatedToken MakeToken(std::string_view word, std::string_view bsyn,
                         std::string_view absyn, std::string_view bsem,
                         std::string_view absem, bool phrase_start,
                         DeletionReason deleted = DeletionReason::kNone);

struct Utterance {
  std::vector<AnnotatedToken> tokens;

  std::vector<std::string> Words() const;
  bool operator==(const Utterance &) const = default;
};

enum class SplitKind { kTrain, kTest };

std::string_view SplitName(SplitKind split);

struct Turn {
  std::string id;
  SplitKind split = SplitKind::kTrain;
  std::vector<Utterance> utterances;

  bool operator==(const Turn &) const = default;
};

struct AnnotatedCorpus {
  std::vector<Turn> turns;

  size_t UtteranceCount() const;
  size_t TokenCount() const;

  // Turns of one split, in corpus order.
  AnnotatedCorpus Subset(SplitKind split) const;

  // Every utterance in corpus order.
  std::vector<const Utterance *> Utterances() const;

  bool operator==(const AnnotatedCorpus &) const = default;
};

// Rejects out-of-range labels, empty turns or utterances, empty words and
// turn ids that occur more than once. Throws Error naming the record.
void ValidateCorpus(const AnnotatedCorpus &corpus);

AnnotatedCorpus ParseCorpus(std::string_view text, const std::string &source);
AnnotatedCorpus LoadCorpus(const std::filesystem::path &path);
std::string FormatCorpus(const AnnotatedCorpus &corpus);
void SaveCorpus(const AnnotatedCorpus &corpus,
                const std::filesystem::path &path);

// A gold phrase over the surviving (non-deleted) tokens of an utterance.
struct GoldPhrase {
  std::vector<size_t> tokens;  // indices into Utterance::tokens
  size_t abs_syn = 0;          // label of the first token
  size_t abs_sem = 0;          // label of the last token

  bool operator==(const GoldPhrase &) const = default;
};

// Partitions the surviving tokens at gold phrase starts; the first surviving
// token always opens a phrase.
std::vector<GoldPhrase> GoldPhrases(const Utterance &utterance);

}  // namespace flatscreen

#endif  // FLATSCREEN_CORPUS_H_
