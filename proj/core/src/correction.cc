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

#include "flatscreen/correction.h"

#include "json.hpp"

#include "flatscreen/error.h"

namespace flatscreen {
namespace {

double PairEquality(NetId id, const CategoryVector &a, const CategoryVector &b,
                    const Models &models) {
  std::vector<double> input(a.values().begin(), a.values().end());
  input.insert(input.end(), b.values().begin(), b.values().end());
  auto out = models.net(id).Forward(input, {}).output;
  return CombineTwoUnitOutput(out[0], out[1]);
}

std::vector<size_t> Survivors(const std::vector<TokenAnnotation> &annotations) {
  std::vector<size_t> out;
  for (size_t i = 0; i < annotations.size(); ++i) {
    if (!annotations[i].is_deleted()) out.push_back(i);
  }
  return out;
}

}  // namespace

bool DetectPauseOrInterjection(std::string_view word, const LookupResult &entry) {
  if (word == kPauseToken) return true;
  static const size_t kInterjection =
      CategoryScheme::Get(Axis::kBasicSyn).IndexOf("I");
  return entry.known && entry.syn[kInterjection] > 0.0;
}

EqualityPreferences WordEquality(std::string_view w1, std::string_view w2,
                                 const TokenAnnotation &a1,
                                 const TokenAnnotation &a2,
                                 const Models &models) {
  EqualityPreferences prefs;
  prefs.lexical = FoldCase(w1) == FoldCase(w2) ? 1.0 : 0.0;
  prefs.syntactic = PairEquality(NetId::kBasSynEq, a1.basic_syn, a2.basic_syn, models);
  prefs.semantic = PairEquality(NetId::kBasSemEq, a1.basic_sem, a2.basic_sem, models);
  return prefs;
}

double RepairScore(NetId net, const EqualityPreferences &prefs,
                   const Models &models) {
  if (net != NetId::kWordError && net != NetId::kPhraseError) {
    throw Error("repair scores come from WORD-ERROR or PHRASE-ERROR");
  }
  const double input[3] = {prefs.lexical, prefs.syntactic, prefs.semantic};
  auto out = models.net(net).Forward(input, {}).output;
  return CombineTwoUnitOutput(out[0], out[1]);
}

bool DecideWordError(const EqualityPreferences &prefs, const Models &models) {
  return RepairScore(NetId::kWordError, prefs, models) >= kRepairThreshold;
}

EqualityPreferences PhraseEquality(const Phrase &p1, const Phrase &p2,
                                   std::span<const TokenAnnotation> annotations,
                                   const Models &models) {
  if (p1.tokens.empty() || p2.tokens.empty()) {
    throw Error("phrase equality needs non-empty phrases");
  }
  const TokenAnnotation &first1 = annotations[p1.tokens.front()];
  const TokenAnnotation &first2 = annotations[p2.tokens.front()];
  const TokenAnnotation &last1 = annotations[p1.tokens.back()];
  const TokenAnnotation &last2 = annotations[p2.tokens.back()];
  EqualityPreferences prefs;
  prefs.lexical = FoldCase(first1.word) == FoldCase(first2.word) ? 1.0 : 0.0;
  prefs.syntactic = PairEquality(NetId::kAbsSynEq, first1.abs_syn, first2.abs_syn, models);
  prefs.semantic = PairEquality(NetId::kAbsSemEq, last1.abs_sem, last2.abs_sem, models);
  return prefs;
}

bool DecidePhraseError(const EqualityPreferences &prefs, const Models &models) {
  return RepairScore(NetId::kPhraseError, prefs, models) >= kRepairThreshold;
}

CorrectionResult ApplyCorrections(std::vector<TokenAnnotation> annotations,
                                  const Lexicon &lexicon, const Models &models) {
  CorrectionResult result;
  result.annotations = std::move(annotations);
  auto &tokens = result.annotations;

  for (;;) {
    bool changed = false;

    for (size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].is_deleted()) continue;
      if (!DetectPauseOrInterjection(tokens[i].word, lexicon.Lookup(tokens[i].word))) {
        continue;
      }
      tokens[i].deleted = tokens[i].word == kPauseToken
                              ? DeletionReason::kPause
                              : DeletionReason::kInterjection;
      result.repairs.push_back({i, tokens[i].deleted, std::nullopt, 1.0});
      changed = true;
    }
    RetagSurvivors(lexicon, models, tokens);

    // The right-hand token of every pair becomes the next left neighbor, so
    // "ich ich ich" loses its first two tokens in one pass.
    std::vector<size_t> survivors = Survivors(tokens);
    bool word_marked = false;
    for (size_t k = 1; k < survivors.size(); ++k) {
      size_t left = survivors[k - 1];
      size_t right = survivors[k];
      EqualityPreferences prefs = WordEquality(
          tokens[left].word, tokens[right].word, tokens[left], tokens[right], models);
      double score = RepairScore(NetId::kWordError, prefs, models);
      if (score < kRepairThreshold) continue;
      tokens[left].deleted = DeletionReason::kWordRepair;
      result.repairs.push_back({left, DeletionReason::kWordRepair, prefs, score});
      result.decisions.push_back(
          {RepairDecision::Kind::kWord, {left}, right, prefs, score});
      word_marked = true;
    }
    if (word_marked) {
      RetagSurvivors(lexicon, models, tokens);
      changed = true;
    }

    if (!Survivors(tokens).empty()) {
      std::vector<Phrase> phrases = FinalizePhrases(tokens);
      bool phrase_marked = false;
      for (size_t j = 1; j < phrases.size(); ++j) {
        const Phrase &left = phrases[j - 1];
        const Phrase &right = phrases[j];
        EqualityPreferences prefs = PhraseEquality(left, right, tokens, models);
        double score = RepairScore(NetId::kPhraseError, prefs, models);
        if (score < kRepairThreshold) continue;
        for (size_t index : left.tokens) {
          tokens[index].deleted = DeletionReason::kPhraseRepair;
          result.repairs.push_back({index, DeletionReason::kPhraseRepair, prefs, score});
        }
        result.decisions.push_back({RepairDecision::Kind::kPhrase, left.tokens,
                                    right.tokens.front(), prefs, score});
        phrase_marked = true;
      }
      if (phrase_marked) {
        RetagSurvivors(lexicon, models, tokens);
        changed = true;
      }
    }

    if (!changed) break;
  }
  return result;
}

std::string RepairsToJson(std::span<const RepairRecord> repairs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto &repair : repairs) {
    nlohmann::ordered_json record;
    record["token"] = repair.token;
    record["reason"] = std::string(DeletionReportName(repair.reason));
    if (repair.prefs) {
      record["preferences"] = {repair.prefs->lexical, repair.prefs->syntactic,
                               repair.prefs->semantic};
    } else {
      record["preferences"] = nullptr;
    }
    record["score"] = repair.score;
    out.push_back(std::move(record));
  }
  return out.dump(2);
}

}  // namespace flatscreen
