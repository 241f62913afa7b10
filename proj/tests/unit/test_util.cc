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

#include "test_util.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <set>
#include <tuple>

#include <unistd.h>

#include "flatscreen/predictor.h"
#include "flatscreen/random.h"
#include "flatscreen/tagger.h"

namespace flatscreen::testing {

Models ScaledModels(uint64_t seed, double scale) {
  Models models = Models::Initialized(seed);
  for (NetId id : kAllNets) {
    Network net = models.net(id);
    for (size_t i = 0; i < net.WeightCount(); ++i) net.Weight(i) *= scale;
    models.Set(id, std::move(net));
  }
  return models;
}

Lexicon PlainLexicon() {
  return Lexicon({
      MakeEntry("ich", {"U"}, {"ANIM"}),
      MakeEntry("meine", {"V", "U"}, {"UTTER", "ANIM"}),
      MakeEntry("habe", {"V"}, {"HAVE"}),
      MakeEntry("am", {"R"}, {"HERE"}),
      MakeEntry("Montag", {"N"}, {"TIME"}),
      MakeEntry("Zeit", {"N"}, {"ABS"}),
      MakeEntry("keine", {"D"}, {"NO"}),
      MakeEntry("gut", {"A", "J"}, {"YES"}),
  });
}

WordGraph RandomGraph(uint64_t seed, size_t count, const std::vector<std::string> &words) {
  Rng rng(seed);
  std::set<std::tuple<Centis, Centis, std::string>> seen;
  std::vector<WordHypothesis> hypotheses;
  // Slots of 10 cs; a hypothesis covers 1-3 slots and ends 1 cs before the
  // next slot boundary so that slot-aligned hypotheses connect.
  while (hypotheses.size() < count) {
    const Centis slot = static_cast<Centis>(rng.Below(5));
    const Centis span = 1 + static_cast<Centis>(rng.Below(3));
    WordHypothesis h;
    h.start = slot * 10;
    h.end = (slot + span) * 10 - 1;
    h.word = words[rng.Below(words.size())];
    h.plausibility = rng.Uniform(0.001, 1.0);
    if (!seen.insert({h.start, h.end, h.word}).second) continue;
    hypotheses.push_back(h);
  }
  return WordGraph(std::move(hypotheses));
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("flatscreen-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ignored;
  std::filesystem::remove_all(path_, ignored);
}

std::vector<OraclePath> EnumeratePaths(const WordGraph &graph, const Lexicon &lexicon,
                                       const Models &models, Centis gap,
                                       RankingMode ranking, KnowledgeMode knowledge) {
  std::vector<OraclePath> out;
  auto max_of = [&](const std::vector<size_t> &indices) {
    double m = 0.0;
    for (size_t i : indices) m = std::max(m, graph[i].plausibility);
    return m;
  };
  std::function<void(std::vector<size_t> &)> walk = [&](std::vector<size_t> &path) {
    const size_t last = path.back();
    if (graph.ReachesEnd(last, gap)) {
      OraclePath p;
      p.hypotheses = path;
      TaggerState tagger = InitialTaggerState(models);
      PredictorState predictor = InitialPredictorState(models);
      for (size_t k = 0; k < path.size(); ++k) {
        const auto &h = graph[path[k]];
        p.words.push_back(h.word);
        const double denom =
            k == 0 ? max_of(graph.EntryPoints(gap)) : max_of(graph.Successors(path[k - 1], gap));
        const double acoustic = h.plausibility / denom;
        const LookupResult entry = lexicon.Lookup(h.word);
        const bool skipped =
            h.word == "<pause>" ||
            (entry.known && entry.syn[CategoryScheme::Get(Axis::kBasicSyn).IndexOf("I")] > 0.0);
        if (skipped) {
          // Pauses and interjections move no context and score only acoustically.
          p.log_sum += std::log(CombinedStep(acoustic, 1.0, 1.0));
          continue;
        }
        const TokenAnnotation a = TagWord(lexicon, models, tagger, h.word);
        double syn = 1.0, sem = 1.0;
        if (knowledge != KnowledgeMode::kAcoustic && predictor.syn_prediction) {
          syn = StepPlausibility(*predictor.syn_prediction, a.basic_syn);
        }
        if (knowledge == KnowledgeMode::kFull && predictor.sem_prediction) {
          sem = StepPlausibility(*predictor.sem_prediction, a.basic_sem);
        }
        PredictNext(Axis::kBasicSyn, predictor, models, a.basic_syn);
        PredictNext(Axis::kBasicSem, predictor, models, a.basic_sem);
        p.log_sum += std::log(CombinedStep(acoustic, syn, sem));
      }
      p.key = ranking == RankingMode::kRaw ? p.log_sum : p.log_sum / path.size();
      out.push_back(std::move(p));
    }
    for (size_t next : graph.Successors(last, gap)) {
      path.push_back(next);
      walk(path);
      path.pop_back();
    }
  };
  for (size_t e : graph.EntryPoints(gap)) {
    std::vector<size_t> path{e};
    walk(path);
  }
  std::sort(out.begin(), out.end(), [&](const OraclePath &a, const OraclePath &b) {
    if (a.key != b.key) return a.key > b.key;
    if (a.hypotheses.size() != b.hypotheses.size()) {
      return a.hypotheses.size() < b.hypotheses.size();
    }
    const Centis ea = graph[a.hypotheses.back()].end;
    const Centis eb = graph[b.hypotheses.back()].end;
    if (ea != eb) return ea < eb;
    return a.words < b.words;
  });
  return out;
}

size_t PrefixCount(const WordGraph &graph, Centis gap) {
  std::vector<size_t> paths_to(graph.size(), 0);
  size_t total = 0;
  for (size_t i = 0; i < graph.size(); ++i) {
    const auto entries = graph.EntryPoints(gap);
    if (std::find(entries.begin(), entries.end(), i) != entries.end()) paths_to[i] += 1;
  }
  for (size_t i = 0; i < graph.size(); ++i) {
    total += paths_to[i];
    for (size_t j : graph.Successors(i, gap)) paths_to[j] += paths_to[i];
  }
  return total;
}

}  // namespace flatscreen::testing
