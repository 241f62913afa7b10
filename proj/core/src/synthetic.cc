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

#include "flatscreen/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string_view>
#include <tuple>

#include "flatscreen/error.h"
#include "flatscreen/fixtures.h"
#include "flatscreen/random.h"
#include "flatscreen/text_util.h"

namespace flatscreen {
namespace {

// Word pools: "word/bsyn/bsem" items.
const std::map<std::string_view, std::string_view> &PoolTable() {
  static const std::map<std::string_view, std::string_view> pools = {
      {"pron", "ich/U/ANIM wir/U/ANIM Sie/U/ANIM er/U/ANIM"},
      {"das_u", "das/U/ABS"},
      {"das_d", "das/D/NIL"},
      {"recip", "mir/U/ANIM uns/U/ANIM Ihnen/U/ANIM"},
      {"poss", "meine/U/NIL"},
      {"person", "Kollegen/N/ANIM Chef/N/ANIM"},
      {"v_utter", "meine/V/UTTER dachte/V/UTTER denke/V/UTTER glaube/V/UTTER "
                  "sage/V/UTTER"},
      {"v_have", "habe/V/HAVE hätte/V/HAVE haben/V/HAVE hatte/V/HAVE "
                 "brauchen/V/HAVE"},
      {"v_is", "bin/V/IS ist/V/IS sind/V/IS wäre/V/IS war/V/IS"},
      {"v_move", "komme/V/MOVE fahre/V/MOVE"},
      {"v_sug", "empfehle/V/SUG"},
      {"modal", "können/V/AUX könnten/V/AUX würde/V/AUX möchte/V/AUX "
                "sollten/V/AUX wollen/V/AUX müssen/V/AUX"},
      {"inf", "treffen/V/MEET sehen/V/MEET nehmen/V/SEL wählen/V/SEL "
              "verschieben/V/MOVE vorschlagen/V/SUG kommen/V/MOVE "
              "fahren/V/MOVE"},
      {"part", "vorgeschlagen/P/SUG gesagt/P/UTTER getroffen/P/MEET "
               "gewählt/P/SEL verschoben/P/MOVE ausgemacht/P/SEL"},
      {"am", "am/R/HERE"},
      {"im", "im/R/HERE"},
      {"um", "um/R/HERE"},
      {"in", "in/R/HERE"},
      {"beim", "beim/R/HERE"},
      {"ausser", "außer/R/HERE"},
      {"von", "von/R/SRC ab/R/SRC"},
      {"von_loc", "von/R/SRC aus/R/SRC"},
      {"bis", "bis/R/DEST"},
      {"nach", "nach/R/DEST"},
      {"ordinal", "ersten/M/TIME zweiten/M/TIME dritten/M/TIME "
                  "sechsten/M/TIME vierzehnten/M/TIME zwanzigsten/M/TIME"},
      {"ordinal_e", "vierzehnte/M/TIME"},
      {"month", "Januar/N/TIME Februar/N/TIME März/N/TIME April/N/TIME "
                "Mai/N/TIME Juni/N/TIME Juli/N/TIME"},
      {"weekday", "Montag/N/TIME Dienstag/N/TIME Mittwoch/N/TIME "
                  "Donnerstag/N/TIME Freitag/N/TIME"},
      {"hour", "neun/M/TIME vier/M/TIME zehn/M/TIME elf/M/TIME zwei/M/TIME "
               "drei/M/TIME acht/M/TIME vierzehn/M/TIME"},
      {"minutes", "dreißig/M/TIME fünfzehn/M/TIME"},
      {"uhr", "Uhr/N/TIME"},
      {"der", "der/D/NIL"},
      {"ein", "ein/D/NIL"},
      {"next", "nächsten/J/TIME kommenden/J/TIME"},
      {"woche", "Woche/N/TIME"},
      {"adv_time", "morgen/A/TIME heute/A/TIME später/A/TIME früher/A/TIME"},
      {"city", "Hamburg/N/LOC Berlin/N/LOC Frankfurt/N/LOC München/N/LOC "
               "Bonn/N/LOC"},
      {"hause", "Hause/N/LOC"},
      {"room", "Büro/N/PHYS Hotel/N/PHYS Raum/N/PHYS"},
      {"doctor", "Zahnarzt/N/ANIM Chef/N/ANIM"},
      {"einen", "einen/D/NIL"},
      {"den", "den/D/NIL"},
      {"die", "die/D/NIL"},
      {"keinen", "keinen/D/NO"},
      {"kein", "kein/D/NO"},
      {"noun_m", "Termin/N/ABS Arzttermin/N/ABS"},
      {"noun_n", "Treffen/N/ABS Problem/N/ABS"},
      {"noun_f", "Besprechung/N/ABS Sitzung/N/ABS Zeit/N/ABS"},
      {"adj", "früheren/J/TIME späteren/J/TIME neuen/J/NIL anderen/J/NIL "
              "kurzen/J/NIL"},
      {"adv", "leider/A/NO schon/A/NIL noch/A/NIL auch/A/NIL "
              "vielleicht/A/NIL allerdings/A/NIL da/A/HERE"},
      {"special", "natürlich/A/NIL dann/A/NIL"},
      {"conf", "ja/O/YES genau/A/YES richtig/A/YES okay/O/YES gut/J/YES "
               "prima/J/YES"},
      {"neg", "nein/O/NO"},
      {"nicht", "nicht/O/NO"},
      {"excl", "Käse/N/NO"},
      {"eval", "schlecht/J/NO"},
      {"questw", "wann/A/QUEST wo/A/QUEST"},
      {"conj", "und/C/NIL aber/C/NIL oder/C/NIL wenn/C/NIL dass/C/NIL"},
      {"vielen", "vielen/J/NIL"},
      {"dank", "Dank/N/YES"},
      {"interj", "ähm/I/NIL äh/I/NIL eh/I/NIL oh/I/NIL hm/I/NIL also/I/NIL"},
  };
  return pools;
}

struct PhraseDef {
  std::string_view name;
  std::string_view abs_syn;
  std::string_view abs_sem;
  // Alternatives of pool sequences; "?pool" is optional.
  std::vector<std::string_view> alternatives;
};

const std::vector<PhraseDef> &PhraseTable() {
  static const std::vector<PhraseDef> phrases = {
      {"SUBJ", "NG", "AGENT", {"pron", "pron", "pron", "das_u"}},
      {"DEMSUBJ", "NG", "AGENT", {"das_u"}},
      {"POSS", "NG", "AGENT", {"poss person"}},
      {"RECIP", "NG", "RECIP", {"recip"}},
      {"VUTTER", "VG", "ACT", {"v_utter"}},
      {"VHAVE", "VG", "ACT", {"v_have"}},
      {"VIS", "VG", "ACT", {"v_is"}},
      {"VMOVE", "VG", "ACT", {"v_move"}},
      {"VSUG", "VG", "ACT", {"v_sug"}},
      {"MODAL", "VG", "AUX", {"modal"}},
      {"INF", "VG", "ACT", {"inf"}},
      {"PART", "VG", "ACT", {"part"}},
      {"TIME", "NG", "TM-AT", {"month", "weekday"}},
      {"DATE", "PG", "TM-AT",
       {"am ordinal month", "am weekday", "im month", "um hour uhr ?minutes",
        "in der next woche"}},
      {"ADVTIME", "AG", "TM-AT", {"adv_time"}},
      {"DEFDATE", "NG", "TM-AT", {"der ordinal_e"}},
      {"PREDDATE", "NG", "TM-AT", {"ein weekday"}},
      {"FROM", "PG", "TM-FRM", {"von hour ?uhr"}},
      {"TO", "PG", "TM-TO", {"bis hour uhr"}},
      {"LOCAT", "PG", "LC-AT", {"in city", "ausser hause", "beim doctor", "im room"}},
      {"LOCTO", "PG", "LC-TO", {"nach city"}},
      {"LOCFRM", "PG", "LC-FRM", {"von_loc city"}},
      {"OBJ", "NG", "OBJ",
       {"einen noun_m", "ein noun_n", "die noun_f", "das_d noun_n",
        "den ?adj noun_m"}},
      {"OBJNEG", "NG", "OBJ", {"keinen noun_m", "kein noun_n"}},
      {"ADV", "AG", "MISC", {"adv"}},
      {"SPECIAL", "SG", "MISC", {"special"}},
      {"CONF", "MG", "CONF", {"conf ?conf"}},
      {"NEG", "MG", "NEG", {"neg"}},
      {"NOT", "AG", "NEG", {"nicht"}},
      {"EXCL", "NG", "NEG", {"excl"}},
      {"EVAL", "AG", "NEG", {"eval"}},
      {"QUEST", "AG", "QUEST", {"questw"}},
      {"CONJ", "CG", "MISC", {"conj"}},
      {"THANKS", "SG", "MISC", {"vielen dank"}},
  };
  return phrases;
}

struct PoolItem {
  std::string word;
  std::string bsyn;
  std::string bsem;
};

std::vector<PoolItem> ParsePool(std::string_view text) {
  std::vector<PoolItem> items;
  for (const auto &item : SplitWhitespace(text)) {
    auto fields = Split(item, '/');
    items.push_back({std::string(fields.at(0)), std::string(fields.at(1)),
                     std::string(fields.at(2))});
  }
  return items;
}

const std::vector<PoolItem> &Pool(std::string_view name) {
  static const std::map<std::string_view, std::vector<PoolItem>> parsed = [] {
    std::map<std::string_view, std::vector<PoolItem>> out;
    for (const auto &[pool_name, text] : PoolTable()) out[pool_name] = ParsePool(text);
    return out;
  }();
  auto it = parsed.find(name);
  if (it == parsed.end()) throw Error("unknown word pool '" + std::string(name) + "'");
  return it->second;
}

const PhraseDef &Phrase(std::string_view name) {
  for (const auto &def : PhraseTable()) {
    if (def.name == name) return def;
  }
  throw Error("unknown phrase '" + std::string(name) + "' in template");
}

// A generated token remembers its pool so that substitutions can draw a
// same-slot alternative.
struct GenToken {
  AnnotatedToken token;
  const std::vector<PoolItem> *pool = nullptr;
};

struct GenPhrase {
  const PhraseDef *def = nullptr;
  std::vector<GenToken> tokens;
};

GenToken MakeGen(const PoolItem &item, const std::vector<PoolItem> *pool,
                 const PhraseDef &def, bool start) {
  return {MakeToken(item.word, item.bsyn, def.abs_syn, item.bsem, def.abs_sem, start),
          pool};
}

GenPhrase GeneratePhrase(const PhraseDef &def, Rng &rng) {
  GenPhrase phrase;
  phrase.def = &def;
  std::string_view alternative = def.alternatives[rng.Below(def.alternatives.size())];
  for (const auto &slot : SplitWhitespace(alternative)) {
    std::string_view name = slot;
    if (name.front() == '?') {
      name.remove_prefix(1);
      if (!rng.Bernoulli(0.5)) continue;
    }
    const auto &pool = Pool(name);
    phrase.tokens.push_back(
        MakeGen(pool[rng.Below(pool.size())], &pool, def, phrase.tokens.empty()));
  }
  return phrase;
}

std::vector<GenPhrase> GenerateFromTemplate(std::string_view tmpl, Rng &rng) {
  std::vector<GenPhrase> phrases;
  for (const auto &element : SplitWhitespace(tmpl)) {
    std::string_view spec = element;
    if (spec.front() == '?') {
      spec.remove_prefix(1);
      if (!rng.Bernoulli(0.5)) continue;
    }
    auto choices = Split(spec, '|');
    std::string_view name = choices[rng.Below(choices.size())];
    phrases.push_back(GeneratePhrase(Phrase(name), rng));
  }
  return phrases;
}

void ValidateTemplate(std::string_view tmpl) {
  auto elements = SplitWhitespace(tmpl);
  if (elements.empty()) throw Error("empty template");
  for (const auto &element : elements) {
    std::string_view spec = element;
    if (spec.front() == '?') spec.remove_prefix(1);
    for (auto name : Split(spec, '|')) Phrase(name);
  }
}

std::vector<GenToken> Flatten(const std::vector<GenPhrase> &phrases) {
  std::vector<GenToken> tokens;
  for (const auto &phrase : phrases) {
    tokens.insert(tokens.end(), phrase.tokens.begin(), phrase.tokens.end());
  }
  return tokens;
}

std::vector<size_t> Candidates(const std::vector<GenToken> &tokens) {
  std::vector<size_t> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].token.is_deleted()) out.push_back(i);
  }
  return out;
}

Utterance GenerateUtterance(const std::vector<std::string> &templates,
                            const NoiseConfig &noise, Rng &rng) {
  std::vector<GenPhrase> phrases =
      GenerateFromTemplate(templates[rng.Below(templates.size())], rng);

  if (rng.Bernoulli(noise.restart_rate)) {
    std::vector<size_t> multi;
    for (size_t i = 0; i < phrases.size(); ++i) {
      if (phrases[i].tokens.size() >= 2) multi.push_back(i);
    }
    if (!multi.empty()) {
      const size_t target = multi[rng.Below(multi.size())];
      GenPhrase restart = GeneratePhrase(*phrases[target].def, rng);
      if (rng.Bernoulli(0.7)) restart.tokens.front() = phrases[target].tokens.front();
      for (auto &gen : restart.tokens) gen.token.deleted = DeletionReason::kPhraseRepair;
      phrases.insert(phrases.begin() + static_cast<std::ptrdiff_t>(target), restart);
    }
  }

  std::vector<GenToken> tokens = Flatten(phrases);

  if (rng.Bernoulli(noise.substitution_rate)) {
    std::vector<size_t> options;
    for (size_t i : Candidates(tokens)) {
      if (tokens[i].pool && tokens[i].pool->size() >= 2) options.push_back(i);
    }
    if (!options.empty()) {
      const size_t target = options[rng.Below(options.size())];
      const auto &pool = *tokens[target].pool;
      GenToken replaced = tokens[target];
      do {
        const PoolItem &item = pool[rng.Below(pool.size())];
        replaced.token.word = item.word;
        replaced.token.labels[static_cast<int>(Axis::kBasicSyn)] =
            CategoryScheme::Get(Axis::kBasicSyn).IndexOf(item.bsyn);
        replaced.token.labels[static_cast<int>(Axis::kBasicSem)] =
            CategoryScheme::Get(Axis::kBasicSem).IndexOf(item.bsem);
      } while (FoldCase(replaced.token.word) == FoldCase(tokens[target].token.word));
      replaced.token.deleted = DeletionReason::kWordRepair;
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(target), replaced);
    }
  }

  if (rng.Bernoulli(noise.repetition_rate)) {
    auto options = Candidates(tokens);
    const size_t target = options[rng.Below(options.size())];
    GenToken copy = tokens[target];
    copy.token.deleted = DeletionReason::kWordRepair;
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(target), copy);
  }

  if (rng.Bernoulli(noise.interjection_rate)) {
    std::vector<size_t> boundaries;
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].token.phrase_start) boundaries.push_back(i);
    }
    const size_t at = boundaries[rng.Below(boundaries.size())];
    AnnotatedToken filler;
    if (rng.Bernoulli(0.2)) {
      filler = MakeToken(kPauseToken, "/", "IG", "NIL", "MISC", true,
                         DeletionReason::kPause);
    } else {
      const auto &pool = Pool("interj");
      filler = MakeToken(pool[rng.Below(pool.size())].word, "I", "IG", "NIL",
                         "MISC", true, DeletionReason::kInterjection);
    }
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(at), {filler, nullptr});
  }

  Utterance utterance;
  for (auto &gen : tokens) utterance.tokens.push_back(std::move(gen.token));
  return utterance;
}

}  // namespace

void NoiseConfig::Validate() const {
  for (double rate : {interjection_rate, repetition_rate, substitution_rate,
                      restart_rate, confusion_rate}) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw Error("noise rates must lie in [0, 1]");
  }
  if (!(hypotheses_per_word >= 1.0)) {
    throw Error("hypotheses per word must be at least 1");
  }
}

const std::vector<std::string> &DefaultTemplates() {
  static const std::vector<std::string> templates = {
      "?EXCL SUBJ VUTTER ?SPECIAL TIME|DATE",
      "SUBJ VUTTER ?SPECIAL DATE|TIME ?LOCAT",
      "SUBJ VUTTER CONJ SUBJ MODAL DATE INF",
      "?EXCL SUBJ VHAVE ?SPECIAL OBJ|TIME|DATE",
      "?EXCL VHAVE SUBJ ?ADV OBJ|TIME|DATE",
      "?EXCL SUBJ VHAVE SUBJ TIME",
      "DATE VIS SUBJ ?ADV LOCAT",
      "?CONF ?ADV VHAVE SUBJ ?ADV FROM TO ?ADV OBJ",
      "SUBJ MODAL ?RECIP DATE ?LOCAT INF",
      "MODAL SUBJ ?RECIP DATE|ADVTIME ?LOCAT INF",
      "SUBJ VHAVE ?SPECIAL OBJ DATE|ADVTIME PART",
      "DEMSUBJ VIS EVAL|CONF",
      "QUEST MODAL SUBJ ?RECIP INF",
      "QUEST VHAVE SUBJ ?ADV TIME|OBJ",
      "CONF ?THANKS",
      "NEG SUBJ VHAVE ?SPECIAL OBJNEG",
      "SUBJ VIS NOT ?ADV LOCAT",
      "SUBJ VMOVE ?DATE LOCTO|LOCFRM",
      "SUBJ VSUG ?SPECIAL OBJ DATE",
      "POSS VIS DATE LOCAT",
      "DEFDATE VIS PREDDATE ?CONF",
      "CONJ SUBJ MODAL DATE INF",
      "?SPECIAL VIS DEMSUBJ ?CONF OBJNEG",
  };
  return templates;
}

std::vector<std::string> PhraseNames() {
  std::vector<std::string> names;
  for (const auto &def : PhraseTable()) names.emplace_back(def.name);
  return names;
}

AnnotatedCorpus GenerateSynthetic(const GrammarConfig &config,
                                  size_t utterances, uint64_t seed) {
  if (utterances == 0) throw Error("synthetic corpus needs at least one utterance");
  config.noise.Validate();
  if (config.min_utterances_per_turn < 1 ||
      config.max_utterances_per_turn < config.min_utterances_per_turn) {
    throw Error("invalid utterances-per-turn range");
  }
  if (config.train_every < 1) throw Error("train_every must be at least 1");
  const std::vector<std::string> &templates =
      config.templates.empty() ? DefaultTemplates() : config.templates;
  for (const auto &tmpl : templates) ValidateTemplate(tmpl);

  Rng rng(seed);
  AnnotatedCorpus corpus;
  size_t produced = 0;
  while (produced < utterances) {
    Turn turn;
    char id[32];
    std::snprintf(id, sizeof id, "syn-%04zu", corpus.turns.size() + 1);
    turn.id = id;
    turn.split = corpus.turns.size() % config.train_every == 0 ? SplitKind::kTrain
                                                               : SplitKind::kTest;
    const size_t span = config.max_utterances_per_turn - config.min_utterances_per_turn + 1;
    size_t count = config.min_utterances_per_turn + rng.Below(span);
    count = std::min(count, utterances - produced);
    for (size_t i = 0; i < count; ++i) {
      turn.utterances.push_back(GenerateUtterance(templates, config.noise, rng));
    }
    produced += count;
    corpus.turns.push_back(std::move(turn));
  }
  ValidateCorpus(corpus);
  return corpus;
}

AnnotatedCorpus BuildExperimentCorpus(const GrammarConfig &config,
                                      size_t utterances, uint64_t seed,
                                      size_t fixture_repeats) {
  AnnotatedCorpus corpus;
  for (size_t r = 0; r < fixture_repeats; ++r) {
    for (Turn turn : FixtureCorpus().turns) {
      if (r > 0) turn.id += "-r" + std::to_string(r + 1);
      corpus.turns.push_back(std::move(turn));
    }
  }
  AnnotatedCorpus synthetic = GenerateSynthetic(config, utterances, seed);
  for (auto &turn : synthetic.turns) corpus.turns.push_back(std::move(turn));
  ValidateCorpus(corpus);
  return corpus;
}

SynthGraph SynthWordGraph(const Utterance &utterance, const NoiseConfig &noise,
                          const Lexicon &lexicon, uint64_t seed) {
  if (utterance.tokens.empty()) throw Error("cannot build a word graph for an empty utterance");
  noise.Validate();
  Rng rng(seed);

  std::vector<std::string> vocabulary;
  for (const auto &entry : lexicon.Entries()) {
    if (entry.word != kPauseToken) vocabulary.push_back(entry.word);
  }
  if (vocabulary.empty()) throw Error("word graph synthesis needs a non-empty lexicon");

  const size_t n = utterance.tokens.size();
  std::vector<WordHypothesis> gold;
  Centis t = 0;
  for (const auto &token : utterance.tokens) {
    const Centis duration = 15 + static_cast<Centis>(rng.Below(31));
    const double p = std::pow(10.0, rng.Uniform(-3.0, -1.5));
    gold.push_back({t, t + duration, token.word, p});
    t += duration + 1;
  }

  std::vector<WordHypothesis> all = gold;
  const size_t confused = static_cast<size_t>(std::lround(noise.confusion_rate * n));
  const size_t budget =
      static_cast<size_t>(std::lround((noise.hypotheses_per_word - 1.0) * n));
  if (confused > 0 && budget > 0) {
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    for (size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.Below(i)]);
    order.resize(confused);
    std::sort(order.begin(), order.end());

    auto random_word = [&](const std::string &avoid) {
      for (;;) {
        const std::string &w = vocabulary[rng.Below(vocabulary.size())];
        if (FoldCase(w) != FoldCase(avoid)) return w;
      }
    };
    auto competitor_p = [&](double gold_p) {
      return std::min(1.0, gold_p * std::pow(10.0, rng.Uniform(-1.2, 0.4)));
    };

    size_t added = 0;
    for (size_t k = 0; added < budget; ++k) {
      const size_t i = order[k % confused];
      const WordHypothesis &g = gold[i];
      const Centis length = g.end - g.start;
      const size_t variant = rng.Below(10);
      if (variant < 5 || (variant == 9 && i + 1 >= n)) {
        all.push_back({g.start, g.end, random_word(g.word), competitor_p(g.plausibility)});
        ++added;
      } else if (variant < 8) {
        Centis start = g.start + static_cast<Centis>(rng.Below(5)) - 2;
        Centis end = g.end + static_cast<Centis>(rng.Below(5)) - 2;
        start = std::max<Centis>(0, start);
        if (i + 1 == n) end = std::min(end, g.end);
        all.push_back({start, end, random_word(g.word), competitor_p(g.plausibility)});
        ++added;
      } else if (variant == 8 && length >= 8 && budget - added >= 2) {
        const Centis mid = g.start + length / 2;
        all.push_back({g.start, mid, random_word(g.word), competitor_p(g.plausibility)});
        all.push_back({mid + 1, g.end, random_word(g.word), competitor_p(g.plausibility)});
        added += 2;
      } else if (variant == 9) {
        const WordHypothesis &next = gold[i + 1];
        all.push_back({g.start, next.end, random_word(g.word),
                       competitor_p(std::max(g.plausibility, next.plausibility))});
        ++added;
      }
    }
  }

  SynthGraph out{WordGraph(std::move(all)), {}};
  const auto &sorted = out.graph.hypotheses();
  for (const auto &g : gold) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), g,
                               [](const WordHypothesis &a, const WordHypothesis &b) {
                                 return std::tie(a.start, a.end, a.word, a.plausibility) <
                                        std::tie(b.start, b.end, b.word, b.plausibility);
                               });
    out.gold_path.push_back(static_cast<size_t>(it - sorted.begin()));
  }
  return out;
}

double HypothesisDensity(const SynthGraph &graph) {
  if (graph.gold_path.empty()) return 0.0;
  return static_cast<double>(graph.graph.size()) / graph.gold_path.size();
}

}  // namespace flatscreen
