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

#include "flatscreen/corpus.h"

#include <set>

#include "flatscreen/error.h"
#include "flatscreen/text_util.h"

namespace flatscreen {

std::string_view DeletionName(DeletionReason reason) {
  switch (reason) {
    case DeletionReason::kNone: return "none";
    case DeletionReason::kPause: return "pause";
    case DeletionReason::kInterjection: return "interjection";
    case DeletionReason::kWordRepair: return "word";
    case DeletionReason::kPhraseRepair: return "phrase";
  }
  return "?";
}

std::optional<DeletionReason> DeletionFromName(std::string_view name) {
  for (auto reason : {DeletionReason::kNone, DeletionReason::kPause,
                      DeletionReason::kInterjection, DeletionReason::kWordRepair,
                      DeletionReason::kPhraseRepair}) {
    if (DeletionName(reason) == name) return reason;
  }
  return std::nullopt;
}

std::string_view DeletionReportName(DeletionReason reason) {
  switch (reason) {
    case DeletionReason::kWordRepair: return "word-repair";
    case DeletionReason::kPhraseRepair: return "phrase-repair";
    default: return DeletionName(reason);
  }
}

std::string_view SplitName(SplitKind split) {
  return split == SplitKind::kTrain ? "train" : "test";
}

AnnotatedToken MakeToken(std::string_view word, std::string_view bsyn,
                         std::string_view absyn, std::string_view bsem,
                         std::string_view absem, bool phrase_start,
                         DeletionReason deleted) {
  AnnotatedToken token;
  token.word = std::string(word);
  token.labels = {CategoryScheme::Get(Axis::kBasicSyn).IndexOf(bsyn),
                  CategoryScheme::Get(Axis::kAbsSyn).IndexOf(absyn),
                  CategoryScheme::Get(Axis::kBasicSem).IndexOf(bsem),
                  CategoryScheme::Get(Axis::kAbsSem).IndexOf(absem)};
  token.phrase_start = phrase_start;
  token.deleted = deleted;
  return token;
}

std::vector<std::string> Utterance::Words() const {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto &token : tokens) words.push_back(token.word);
  return words;
}

size_t AnnotatedCorpus::UtteranceCount() const {
  size_t count = 0;
  for (const auto &turn : turns) count += turn.utterances.size();
  return count;
}

size_t AnnotatedCorpus::TokenCount() const {
  size_t count = 0;
  for (const auto &turn : turns) {
    for (const auto &utterance : turn.utterances) count += utterance.tokens.size();
  }
  return count;
}

AnnotatedCorpus AnnotatedCorpus::Subset(SplitKind split) const {
  AnnotatedCorpus subset;
  for (const auto &turn : turns) {
    if (turn.split == split) subset.turns.push_back(turn);
  }
  return subset;
}

std::vector<const Utterance *> AnnotatedCorpus::Utterances() const {
  std::vector<const Utterance *> out;
  for (const auto &turn : turns) {
    for (const auto &utterance : turn.utterances) out.push_back(&utterance);
  }
  return out;
}

void ValidateCorpus(const AnnotatedCorpus &corpus) {
  std::set<std::string> ids;
  for (const auto &turn : corpus.turns) {
    if (turn.id.empty()) throw Error("turn with empty id");
    if (!ids.insert(turn.id).second) {
      throw Error("split error: turn id '" + turn.id +
                  "' appears more than once");
    }
    if (turn.utterances.empty()) {
      throw Error("turn '" + turn.id + "' has no utterances");
    }
    for (size_t u = 0; u < turn.utterances.size(); ++u) {
      const auto &tokens = turn.utterances[u].tokens;
      if (tokens.empty()) {
        throw Error("turn '" + turn.id + "' utterance " + std::to_string(u) +
                    " is empty");
      }
      for (size_t t = 0; t < tokens.size(); ++t) {
        const auto &token = tokens[t];
        if (token.word.empty()) {
          throw Error("turn '" + turn.id + "' utterance " + std::to_string(u) +
                      " token " + std::to_string(t) + " has an empty word");
        }
        for (Axis axis : kAllAxes) {
          if (token.label(axis) >= AxisSize(axis)) {
            throw Error("turn '" + turn.id + "' utterance " +
                        std::to_string(u) + " token " + std::to_string(t) +
                        ": " + std::string(AxisName(axis)) +
                        " label out of range");
          }
        }
      }
    }
  }
}

AnnotatedCorpus ParseCorpus(std::string_view text, const std::string &source) {
  AnnotatedCorpus corpus;
  Utterance current;
  int line_number = 0;
  std::set<std::string> ids;

  auto flush = [&]() {
    if (current.tokens.empty()) return;
    if (corpus.turns.empty()) {
      throw ParseError(source, line_number, "token before any '== turn' header");
    }
    corpus.turns.back().utterances.push_back(std::move(current));
    current = Utterance();
  };

  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view content = Trim(line);
    if (content.empty()) {
      flush();
      continue;
    }
    if (content.front() == '#') continue;
    if (content.starts_with("==")) {
      flush();
      auto fields = SplitWhitespace(content);
      if (fields.size() != 4 || fields[0] != "==" || fields[1] != "turn") {
        throw ParseError(source, line_number,
                         "turn header must be '== turn <id> <train|test>'");
      }
      Turn turn;
      turn.id = fields[2];
      if (fields[3] == "train") {
        turn.split = SplitKind::kTrain;
      } else if (fields[3] == "test") {
        turn.split = SplitKind::kTest;
      } else {
        throw ParseError(source, line_number,
                         "field 'split': expected train or test, got '" +
                             fields[3] + "'");
      }
      if (!ids.insert(turn.id).second) {
        throw ParseError(source, line_number,
                         "split error: duplicate turn id '" + turn.id + "'");
      }
      if (!corpus.turns.empty() && corpus.turns.back().utterances.empty()) {
        throw ParseError(source, line_number,
                         "turn '" + corpus.turns.back().id + "' is empty");
      }
      corpus.turns.push_back(std::move(turn));
      continue;
    }
    auto fields = Split(line, '\t');
    if (fields.size() != 7) {
      throw ParseError(source, line_number,
                       "expected 7 tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    AnnotatedToken token;
    token.word = std::string(Trim(fields[0]));
    if (token.word.empty()) throw ParseError(source, line_number, "field 'word' is empty");
    for (size_t a = 0; a < 4; ++a) {
      Axis axis = kAllAxes[a];
      auto index = CategoryScheme::Get(axis).Find(Trim(fields[a + 1]));
      if (!index) {
        throw ParseError(source, line_number,
                         "field '" + std::string(AxisName(axis)) +
                             "': unknown label '" +
                             std::string(Trim(fields[a + 1])) + "' for token '" +
                             token.word + "'");
      }
      token.labels[a] = *index;
    }
    std::string_view start = Trim(fields[5]);
    if (start != "0" && start != "1") {
      throw ParseError(source, line_number,
                       "field 'phrase_start': expected 0 or 1");
    }
    token.phrase_start = start == "1";
    auto deleted = DeletionFromName(Trim(fields[6]));
    if (!deleted) {
      throw ParseError(source, line_number,
                       "field 'deleted': unknown reason '" +
                           std::string(Trim(fields[6])) + "'");
    }
    token.deleted = *deleted;
    current.tokens.push_back(std::move(token));
  }
  flush();
  if (corpus.turns.empty()) throw ParseError(source, line_number, "empty corpus");
  try {
    ValidateCorpus(corpus);
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    throw ParseError(source, line_number, e.what());
  }
  return corpus;
}

AnnotatedCorpus LoadCorpus(const std::filesystem::path &path) {
  return ParseCorpus(ReadFile(path), path.string());
}

std::string FormatCorpus(const AnnotatedCorpus &corpus) {
  std::string out;
  for (const auto &turn : corpus.turns) {
    out += "== turn " + turn.id + " " + std::string(SplitName(turn.split)) + "\n";
    for (const auto &utterance : turn.utterances) {
      for (const auto &token : utterance.tokens) {
        out += token.word;
        for (Axis axis : kAllAxes) {
          out += '\t';
          out += CategoryScheme::Get(axis).abbrev(token.label(axis));
        }
        out += token.phrase_start ? "\t1\t" : "\t0\t";
        out += DeletionName(token.deleted);
        out += '\n';
      }
      out += '\n';
    }
  }
  return out;
}

void SaveCorpus(const AnnotatedCorpus &corpus,
                const std::filesystem::path &path) {
  WriteFile(path, FormatCorpus(corpus));
}

std::vector<GoldPhrase> GoldPhrases(const Utterance &utterance) {
  std::vector<GoldPhrase> phrases;
  for (size_t i = 0; i < utterance.tokens.size(); ++i) {
    const auto &token = utterance.tokens[i];
    if (token.is_deleted()) continue;
    if (phrases.empty() || token.phrase_start) {
      GoldPhrase phrase;
      phrase.abs_syn = token.label(Axis::kAbsSyn);
      phrases.push_back(std::move(phrase));
    }
    phrases.back().tokens.push_back(i);
    phrases.back().abs_sem = token.label(Axis::kAbsSem);
  }
  return phrases;
}

}  // namespace flatscreen
