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

// Word lexicon with ambiguous basic category memberships.
//
// Every word maps to a binary membership vector on the basic syntactic and
// the basic semantic axis. Words missing from the lexicon fall back to the
// average default vectors, which hold the fraction of entries carrying each
// label. Lexicons are immutable values once built; Ablate returns a copy.

#ifndef FLATSCREEN_LEXICON_H_
#define FLATSCREEN_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flatscreen/category.h"

namespace flatscreen {

// Reserved surface form carrying the pause category "/".
inline constexpr std::string_view kPauseToken = "<pause>";

// Lower-cases ASCII letters and the German umlauts. Other bytes are kept.
std::string FoldCase(std::string_view word);

struct LexiconEntry {
  std::string word;
  CategoryVector syn{Axis::kBasicSyn};
  CategoryVector sem{Axis::kBasicSem};

  bool operator==(const LexiconEntry &) const = default;
};

// Builds an entry from label abbreviations; throws on unknown labels or an
// empty label list.
LexiconEntry MakeEntry(std::string_view word,
                       const std::vector<std::string> &syn_labels,
                       const std::vector<std::string> &sem_labels);

struct LookupResult {
  CategoryVector syn;
  CategoryVector sem;
  bool known = false;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexiconEntry> entries);

  LookupResult Lookup(std::string_view word) const;
  const LexiconEntry *Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word) != nullptr; }

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Entries ordered by folded word.
  std::vector<LexiconEntry> Entries() const;

  const CategoryVector &default_syn() const { return default_syn_; }
  const CategoryVector &default_sem() const { return default_sem_; }

  bool operator==(const Lexicon &other) const {
    return entries_ == other.entries_;
  }

 private:
  void RecomputeDefaults();

  std::map<std::string, LexiconEntry, std::less<>> entries_;
  CategoryVector default_syn_{Axis::kBasicSyn};
  CategoryVector default_sem_{Axis::kBasicSem};
};

// Element i is the fraction of entries whose membership includes label i.
// Axis must be kBasicSyn or kBasicSem. Throws Error("empty lexicon").
CategoryVector AverageDefaultVector(const Lexicon &lexicon, Axis axis);

// Copy with floor(fraction * size) entries removed, chosen by a seeded
// shuffle. Requires 0 <= fraction < 1.
Lexicon Ablate(const Lexicon &lexicon, double fraction, uint64_t seed);

// Line format: word TAB syn[,syn...] TAB sem[,sem...]; '#' starts a comment.
Lexicon ParseLexicon(std::string_view text, const std::string &source);
Lexicon LoadLexicon(const std::filesystem::path &path);
std::string FormatLexicon(const Lexicon &lexicon);
void SaveLexicon(const Lexicon &lexicon, const std::filesystem::path &path);

}  // namespace flatscreen

#endif  // FLATSCREEN_LEXICON_H_
