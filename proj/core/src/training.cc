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

#include "flatscreen/training.h"

#include "flatscreen/error.h"
#include "flatscreen/parallel.h"
#include "flatscreen/random.h"

namespace flatscreen {
namespace {

std::vector<double> OneHotValues(Axis axis, size_t label) {
  std::vector<double> v(AxisSize(axis), 0.0);
  v[label] = 1.0;
  return v;
}

std::vector<double> ToVector(const CategoryVector &v) {
  return {v.values().begin(), v.values().end()};
}

std::vector<double> Flag(bool positive) {
  return positive ? std::vector<double>{1.0, 0.0} : std::vector<double>{0.0, 1.0};
}

std::vector<double> Concat(std::vector<double> a, const std::vector<double> &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<double> Features(const std::array<double, 3> &f) {
  return {f[0], f[1], f[2]};
}

// All label pairs once, with each equal pair repeated so that equal and
// unequal targets are balanced.
Sequence LabelCrossProduct(Axis axis) {
  const size_t n = AxisSize(axis);
  Sequence patterns;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const size_t copies = i == j ? n - 1 : 1;
      for (size_t c = 0; c < copies; ++c) {
        patterns.push_back(
            {Concat(OneHotValues(axis, i), OneHotValues(axis, j)), Flag(i == j)});
      }
    }
  }
  return patterns;
}

// Graded copy of a one-hot pair, resembling disambiguation output.
Sequence Soften(const Sequence &sequence, Rng &rng) {
  Sequence out = sequence;
  for (auto &pattern : out) {
    for (double &v : pattern.input) v = v > 0.5 ? rng.Uniform(0.6, 1.0) : rng.Uniform(0.0, 0.1);
  }
  return out;
}

}  // namespace

std::vector<const AnnotatedToken *> TaggerStream(const Utterance &utterance) {
  std::vector<const AnnotatedToken *> stream;
  for (const auto &token : utterance.tokens) {
    if (token.deleted == DeletionReason::kPause ||
        token.deleted == DeletionReason::kInterjection) {
      continue;
    }
    stream.push_back(&token);
  }
  return stream;
}

std::vector<const AnnotatedToken *> PredictionStream(const Utterance &utterance) {
  std::vector<const AnnotatedToken *> stream;
  for (const auto &token : utterance.tokens) {
    if (!token.is_deleted()) stream.push_back(&token);
  }
  return stream;
}

std::array<double, 3> WordPairFeatures(const AnnotatedToken &a,
                                       const AnnotatedToken &b) {
  return {FoldCase(a.word) == FoldCase(b.word) ? 1.0 : 0.0,
          a.label(Axis::kBasicSyn) == b.label(Axis::kBasicSyn) ? 1.0 : 0.0,
          a.label(Axis::kBasicSem) == b.label(Axis::kBasicSem) ? 1.0 : 0.0};
}

TrainingSets DeriveTrainingSets(const AnnotatedCorpus &corpus,
                                const Lexicon &lexicon,
                                const DeriveOptions &options) {
  if (corpus.UtteranceCount() == 0) throw Error("cannot derive training sets from an empty corpus");
  if (!(options.unknown_rate >= 0.0 && options.unknown_rate <= 1.0)) {
    throw Error("unknown-word rate must lie in [0, 1]");
  }
  Rng rng(options.seed);
  TrainingSets sets;
  sets[NetId::kBasSynEq].sequences.push_back(LabelCrossProduct(Axis::kBasicSyn));
  sets[NetId::kBasSemEq].sequences.push_back(LabelCrossProduct(Axis::kBasicSem));
  sets[NetId::kAbsSynEq].sequences.push_back(LabelCrossProduct(Axis::kAbsSyn));
  sets[NetId::kAbsSemEq].sequences.push_back(LabelCrossProduct(Axis::kAbsSem));

  for (const Utterance *utterance : corpus.Utterances()) {
    const auto stream = TaggerStream(*utterance);
    if (stream.empty()) continue;

    Sequence syn_dis, sem_dis, abs_syn, abs_sem, start, syn_pre, sem_pre;
    for (size_t i = 0; i < stream.size(); ++i) {
      const AnnotatedToken &t = *stream[i];
      const size_t bsyn = t.label(Axis::kBasicSyn);
      const size_t bsem = t.label(Axis::kBasicSem);
      const LookupResult entry = lexicon.Lookup(t.word);
      syn_dis.push_back({ToVector(entry.syn), OneHotValues(Axis::kBasicSyn, bsyn)});
      sem_dis.push_back({ToVector(entry.sem), OneHotValues(Axis::kBasicSem, bsem)});
      abs_syn.push_back({OneHotValues(Axis::kBasicSyn, bsyn),
                         OneHotValues(Axis::kAbsSyn, t.label(Axis::kAbsSyn))});
      abs_sem.push_back({OneHotValues(Axis::kBasicSem, bsem),
                         OneHotValues(Axis::kAbsSem, t.label(Axis::kAbsSem))});
      start.push_back({OneHotValues(Axis::kBasicSyn, bsyn), Flag(i == 0 || t.phrase_start)});
      if (i + 1 < stream.size()) {
        const AnnotatedToken &next = *stream[i + 1];
        sets[NetId::kWordError].sequences.push_back(
            {{Features(WordPairFeatures(t, next)),
              Flag(t.deleted == DeletionReason::kWordRepair)}});
      }
    }
    const auto fluent = PredictionStream(*utterance);
    for (size_t i = 0; i + 1 < fluent.size(); ++i) {
      const AnnotatedToken &t = *fluent[i];
      const AnnotatedToken &next = *fluent[i + 1];
      syn_pre.push_back({OneHotValues(Axis::kBasicSyn, t.label(Axis::kBasicSyn)),
                         OneHotValues(Axis::kBasicSyn, next.label(Axis::kBasicSyn))});
      sem_pre.push_back({OneHotValues(Axis::kBasicSem, t.label(Axis::kBasicSem)),
                         OneHotValues(Axis::kBasicSem, next.label(Axis::kBasicSem))});
    }
    if (options.unknown_rate > 0.0) {
      Sequence syn_unknown = syn_dis;
      Sequence sem_unknown = sem_dis;
      for (size_t i = 0; i < stream.size(); ++i) {
        if (!rng.Bernoulli(options.unknown_rate)) continue;
        syn_unknown[i].input = ToVector(lexicon.default_syn());
        sem_unknown[i].input = ToVector(lexicon.default_sem());
      }
      sets[NetId::kBasSynDis].sequences.push_back(std::move(syn_unknown));
      sets[NetId::kBasSemDis].sequences.push_back(std::move(sem_unknown));
    }
    sets[NetId::kBasSynDis].sequences.push_back(std::move(syn_dis));
    sets[NetId::kBasSemDis].sequences.push_back(std::move(sem_dis));
    sets[NetId::kAbsSynCat].sequences.push_back(std::move(abs_syn));
    sets[NetId::kAbsSemCat].sequences.push_back(std::move(abs_sem));
    sets[NetId::kPhraseStart].sequences.push_back(std::move(start));
    if (!syn_pre.empty()) {
      sets[NetId::kBasSynPre].sequences.push_back(std::move(syn_pre));
      sets[NetId::kBasSemPre].sequences.push_back(std::move(sem_pre));
    }

    // Phrases as the phrase pass sees them: word repairs already removed.
    std::vector<std::vector<const AnnotatedToken *>> phrases;
    for (const AnnotatedToken *t : stream) {
      if (t->deleted == DeletionReason::kWordRepair) continue;
      if (phrases.empty() || t->phrase_start) phrases.emplace_back();
      phrases.back().push_back(t);
    }
    for (size_t j = 1; j < phrases.size(); ++j) {
      const auto &left = phrases[j - 1];
      const auto &right = phrases[j];
      const size_t ls = left.front()->label(Axis::kAbsSyn);
      const size_t rs = right.front()->label(Axis::kAbsSyn);
      const size_t lm = left.back()->label(Axis::kAbsSem);
      const size_t rm = right.back()->label(Axis::kAbsSem);
      const std::array<double, 3> features = {
          FoldCase(left.front()->word) == FoldCase(right.front()->word) ? 1.0 : 0.0,
          ls == rs ? 1.0 : 0.0, lm == rm ? 1.0 : 0.0};
      bool repaired = true;
      for (const AnnotatedToken *t : left) {
        repaired = repaired && t->deleted == DeletionReason::kPhraseRepair;
      }
      sets[NetId::kPhraseError].sequences.push_back({{Features(features), Flag(repaired)}});
    }
  }
  if (options.soft_equality) {
    Rng soft(options.seed ^ 0x50f7ULL);
    for (NetId id : {NetId::kBasSynEq, NetId::kBasSemEq, NetId::kAbsSynEq, NetId::kAbsSemEq}) {
      auto &sequences = sets[id].sequences;
      const size_t original = sequences.size();
      for (size_t i = 0; i < original; ++i) sequences.push_back(Soften(sequences[i], soft));
    }
  }
  return sets;
}

ModelTrainingResult TrainModels(const TrainingSets &sets,
                                const ModelTrainingConfig &config) {
  config.base.Validate();
  ModelTrainingResult result;
  std::array<Network, kNetCount> trained;
  ParallelFor(kNetCount, config.threads, [&](size_t i) {
    const NetId id = kAllNets[i];
    const NetworkSpec spec = NetSpec(id, config.base.hidden_units);
    TrainingConfig net_config = config.base;
    net_config.hidden_units = spec.n_hidden;
    net_config.seed = NetSeed(config.base.seed, id);
    Network network = InitNetwork(spec, net_config.seed, std::string(NetName(id)));
    if (sets[id].empty()) {
      trained[i] = std::move(network);
      return;
    }
    TrainingResult r = Train(std::move(network), sets[id], net_config);
    trained[i] = std::move(r.network);
    result.loss_history[i] = std::move(r.loss_history);
  });
  for (size_t i = 0; i < kNetCount; ++i) result.models.Set(kAllNets[i], std::move(trained[i]));
  return result;
}

}  // namespace flatscreen
