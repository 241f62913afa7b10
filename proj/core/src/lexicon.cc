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

#include "flatscreen/lexicon.h"

#include <algorithm>
#include <cmath>

#include "flatscreen/error.h"
#include "flatscreen/random.h"
#include "flatscreen/text_util.h"

namespace flatscreen {

std::string FoldCase(std::string_view word) {
  std::string folded;
  folded.reserve(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(word[i]);
    if (c >= 'A' && c <= 'Z') {
      folded.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (c == 0xC3 && i + 1 < word.size()) {
      unsigned char next = static_cast<unsigned char>(word[i + 1]);
      // Ä Ö Ü -> ä ö ü
      if (next == 0x84 || next == 0x96 || next == 0x9C) next += 0x20;
      folded.push_back(static_cast<char>(c));
      folded.push_back(static_cast<char>(next));
      ++i;
    } else {
      folded.push_back(static_cast<char>(c));
    }
  }
  return folded;
}

LexiconEntry MakeEntry(std::string_view word,
                       const std::vector<std::string> &syn_labels,
                       const std::vector<std::string> &sem_labels) {
  if (word.empty()) throw Error("empty lexicon word");
  if (syn_labels.empty() || sem_labels.empty()) {
    throw Error("lexicon entry '" + std::string(word) +
                "' needs at least one label per axis");
  }
  LexiconEntry entry;
  entry.word = std::string(word);
  const auto &syn_scheme = CategoryScheme::Get(Axis::kBasicSyn);
  const auto &sem_scheme = CategoryScheme::Get(Axis::kBasicSem);
  for (const auto &label : syn_labels) entry.syn.Set(syn_scheme.IndexOf(label), 1.0);
  for (const auto &label : sem_labels) entry.sem.Set(sem_scheme.IndexOf(label), 1.0);
  return entry;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) {
  for (auto &entry : entries) {
    std::string key = FoldCase(entry.word);
    if (entries_.count(key)) {
      throw Error("duplicate lexicon entry '" + entry.word + "'");
    }
    entries_.emplace(std::move(key), std::move(entry));
  }
  RecomputeDefaults();
}

void Lexicon::RecomputeDefaults() {
  if (entries_.empty()) {
    default_syn_ = CategoryVector(Axis::kBasicSyn);
    default_sem_ = CategoryVector(Axis::kBasicSem);
    return;
  }
  default_syn_ = AverageDefaultVector(*this, Axis::kBasicSyn);
  default_sem_ = AverageDefaultVector(*this, Axis::kBasicSem);
}

const LexiconEntry *Lexicon::Find(std::string_view word) const {
  auto it = entries_.find(FoldCase(word));
  return it == entries_.end() ? nullptr : &it->second;
}

LookupResult Lexicon::Lookup(std::string_view word) const {
  if (const LexiconEntry *entry = Find(word)) {
    return {entry->syn, entry->sem, true};
  }
  return {default_syn_, default_sem_, false};
}

std::vector<LexiconEntry> Lexicon::Entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto &[key, entry] : entries_) out.push_back(entry);
  return out;
}

CategoryVector AverageDefaultVector(const Lexicon &lexicon, Axis axis) {
  if (axis != Axis::kBasicSyn && axis != Axis::kBasicSem) {
    throw Error("default vectors exist only for basic axes");
  }
  if (lexicon.empty()) throw Error("empty lexicon");
  std::vector<double> counts(AxisSize(axis), 0.0);
  for (const auto &entry : lexicon.Entries()) {
    const CategoryVector &membership =
        axis == Axis::kBasicSyn ? entry.syn : entry.sem;
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += membership[i];
  }
  const double total = static_cast<double>(lexicon.size());
  for (double &c : counts) c /= total;
  return CategoryVector(axis, std::move(counts));
}

Lexicon Ablate(const Lexicon &lexicon, double fraction, uint64_t seed) {
  if (!(fraction >= 0.0 && fraction < 1.0)) {
    throw Error("ablation fraction must lie in [0,1)");
  }
  std::vector<LexiconEntry> entries = lexicon.Entries();
  const size_t remove = static_cast<size_t>(
      std::floor(fraction * static_cast<double>(entries.size())));
  Rng rng(seed);
  // Partial Fisher-Yates: the first `remove` slots become the removed set.
  for (size_t i = 0; i < remove; ++i) {
    size_t j = i + rng.Below(entries.size() - i);
    std::swap(entries[i], entries[j]);
  }
  entries.erase(entries.begin(), entries.begin() + static_cast<long>(remove));
  return Lexicon(std::move(entries));
}

Lexicon ParseLexicon(std::string_view text, const std::string &source) {
  std::vector<LexiconEntry> entries;
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view content = Trim(line);
    if (content.empty() || content.front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError(source, line_number,
                       "expected 3 tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    std::string_view word = Trim(fields[0]);
    if (word.empty()) throw ParseError(source, line_number, "empty word field");
    std::vector<std::string> syn, sem;
    for (auto label : Split(fields[1], ',')) syn.emplace_back(Trim(label));
    for (auto label : Split(fields[2], ',')) sem.emplace_back(Trim(label));
    try {
      entries.push_back(MakeEntry(word, syn, sem));
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(source, line_number, e.what());
    }
  }
  try {
    return Lexicon(std::move(entries));
  } catch (const Error &e) {
    throw ParseError(source, line_number, e.what());
  }
}

Lexicon LoadLexicon(const std::filesystem::path &path) {
  return ParseLexicon(ReadFile(path), path.string());
}

std::string FormatLexicon(const Lexicon &lexicon) {
  std::string out = "# word\tbasic-syn\tbasic-sem\n";
  const auto &syn_scheme = CategoryScheme::Get(Axis::kBasicSyn);
  const auto &sem_scheme = CategoryScheme::Get(Axis::kBasicSem);
  auto labels = [](const CategoryVector &v, const CategoryScheme &scheme) {
    std::string joined;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0.0) continue;
      if (!joined.empty()) joined += ',';
      joined += scheme.abbrev(i);
    }
    return joined;
  };
  for (const auto &entry : lexicon.Entries()) {
    out += entry.word;
    out += '\t';
    out += labels(entry.syn, syn_scheme);
    out += '\t';
    out += labels(entry.sem, sem_scheme);
    out += '\n';
  }
  return out;
}

void SaveLexicon(const Lexicon &lexicon, const std::filesystem::path &path) {
  WriteFile(path, FormatLexicon(lexicon));
}

}  // namespace flatscreen
