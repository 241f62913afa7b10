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

#include "flatscreen/decoder.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "flatscreen/error.h"
#include "flatscreen/fixtures.h"
#include "flatscreen/text_util.h"
#include "test_util.h"

namespace flatscreen {
namespace {

const std::vector<std::string> kWords = {"ich", "meine", "habe", "am", "Montag", "Zeit"};

class DecoderOracleTest : public ::testing::TestWithParam<uint64_t> {};

TEST_P(DecoderOracleTest, WideBeamMatchesExhaustiveSearch) {
  const uint64_t seed = GetParam();
  const Lexicon lexicon = testing::PlainLexicon();
  const Models models = testing::ScaledModels(seed, 8.0);
  const WordGraph graph = testing::RandomGraph(seed, 6 + seed % 7, kWords);
  for (RankingMode ranking : {RankingMode::kNormalized, RankingMode::kRaw}) {
    for (KnowledgeMode knowledge :
         {KnowledgeMode::kAcoustic, KnowledgeMode::kAcousticSyntax, KnowledgeMode::kFull}) {
      DecoderConfig config;
      config.ranking = ranking;
      config.knowledge = knowledge;
      config.apply_corrections = false;
      config.beam_width = testing::PrefixCount(graph, config.gap) + 1;
      const auto expected =
          testing::EnumeratePaths(graph, lexicon, models, config.gap, ranking, knowledge);
      const auto result = Decode(graph, lexicon, models, config);
      ASSERT_EQ(result.ranked.size(), expected.size()) << "seed " << seed;
      for (size_t i = 0; i < expected.size(); ++i) {
        const auto &got = result.ranked[i].state;
        EXPECT_EQ(got.Words(graph), expected[i].words) << "seed " << seed << " rank " << i;
        EXPECT_NEAR(got.score.RankKey(ranking), expected[i].key, 1e-12);
        EXPECT_NEAR(got.score.log_sum(), expected[i].log_sum, 1e-12);
      }
      EXPECT_TRUE(result.longest_partials.empty() || result.ranked.empty());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DecoderOracleTest, ::testing::Range<uint64_t>(1, 41));

WordGraph LinearGraph() {
  return WordGraph({{0, 9, "ich", 0.9}, {10, 19, "habe", 0.8}, {20, 29, "keine", 0.7},
                    {30, 39, "Zeit", 0.6}});
}

TEST(Decode, BeamOfOneOnALinearGraph) {
  const Lexicon lexicon = testing::PlainLexicon();
  const Models models = testing::ScaledModels(2, 5.0);
  DecoderConfig config;
  config.beam_width = 1;
  const auto result = Decode(LinearGraph(), lexicon, models, config);
  ASSERT_EQ(result.ranked.size(), 1u);
  EXPECT_EQ(result.ranked[0].state.Words(LinearGraph()),
            (std::vector<std::string>{"ich", "habe", "keine", "Zeit"}));
  // First step and every later step are the only choice: acoustic factor 1.
  for (const auto &step : result.ranked[0].state.score.steps()) {
    EXPECT_DOUBLE_EQ(step.acoustic, 1.0);
  }
}

TEST(Decode, SingleHypothesis) {
  const WordGraph graph({{0, 20, "gut", 0.3}});
  const auto result = Decode(graph, testing::PlainLexicon(), Models(), {});
  ASSERT_EQ(result.ranked.size(), 1u);
  EXPECT_DOUBLE_EQ(result.ranked[0].state.score.Normalized(), 1.0);
}

TEST(Decode, DeadEndsNeverComplete) {
  // "keine" at 10-19 has no successor and ends early.
  const WordGraph graph({{0, 9, "ich", 0.9}, {10, 19, "keine", 0.9}, {10, 39, "habe", 0.2}});
  DecoderConfig config;
  config.apply_corrections = false;
  const auto result = Decode(graph, testing::PlainLexicon(), Models(), config);
  ASSERT_EQ(result.ranked.size(), 1u);
  EXPECT_EQ(result.ranked[0].state.Words(graph), (std::vector<std::string>{"ich", "habe"}));
}

TEST(Decode, LongestPartialsWhenNothingCompletes) {
  // A hole between 19 and 30 cuts every path.
  const WordGraph graph({{0, 9, "ich", 0.9}, {10, 19, "habe", 0.9}, {30, 39, "Zeit", 0.5}});
  const auto result = Decode(graph, testing::PlainLexicon(), Models(), {});
  EXPECT_FALSE(result.complete());
  ASSERT_FALSE(result.longest_partials.empty());
  EXPECT_EQ(result.longest_partials[0].Words(graph),
            (std::vector<std::string>{"ich", "habe"}));
}

TEST(Decode, EmptyGraphAndBadConfig) {
  EXPECT_THROW(Decode(WordGraph(), testing::PlainLexicon(), Models(), {}), Error);
  DecoderConfig config;
  config.beam_width = 0;
  EXPECT_THROW(Decode(LinearGraph(), testing::PlainLexicon(), Models(), config), Error);
  config.beam_width = 1;
  config.gap = 0;
  EXPECT_THROW(Decode(LinearGraph(), testing::PlainLexicon(), Models(), config), Error);
}

TEST(Decode, TopScoreDoesNotDropWithWiderBeams) {
  const Lexicon lexicon = testing::PlainLexicon();
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    const Models models = testing::ScaledModels(seed, 8.0);
    const WordGraph graph = testing::RandomGraph(seed + 100, 12, kWords);
    double previous = -INFINITY;
    bool seen_complete = false;
    for (size_t beam : {1, 2, 4, 8, 16, 64, 1000}) {
      DecoderConfig config;
      config.beam_width = beam;
      config.apply_corrections = false;
      const auto result = Decode(graph, lexicon, models, config);
      if (!result.complete()) {
        EXPECT_FALSE(seen_complete) << "seed " << seed << " beam " << beam;
        continue;
      }
      seen_complete = true;
      const double key = result.ranked[0].state.score.RankKey(config.ranking);
      EXPECT_GE(key + 1e-12, previous) << "seed " << seed << " beam " << beam;
      previous = key;
    }
    DecoderConfig wide;
    wide.beam_width = 100000;
    wide.apply_corrections = false;
    const auto best = testing::EnumeratePaths(graph, lexicon, models, wide.gap, wide.ranking, wide.knowledge);
    if (!best.empty()) {
      const auto result = Decode(graph, lexicon, models, wide);
      EXPECT_NEAR(result.ranked[0].state.score.RankKey(wide.ranking), best[0].key, 1e-12);
      EXPECT_LE(previous, best[0].key + 1e-12);
    }
  }
}

TEST(Decode, ThreadCountDoesNotChangeOutput) {
  const Lexicon &lexicon = MeetingLexicon();
  const Models models = testing::ScaledModels(5, 6.0);
  const WordGraph graph = ParseWordGraph(ExampleWordGraphText(), "example");
  DecoderConfig config;
  config.record_trace = true;
  const auto one = Decode(graph, lexicon, models, config);
  config.threads = 4;
  const auto four = Decode(graph, lexicon, models, config);
  EXPECT_EQ(DecodeResultToJson(one, graph, config.ranking, true),
            DecodeResultToJson(four, graph, config.ranking, true));
}

TEST(Decode, ExampleGraphContainsTheCompetingPaths) {
  const WordGraph graph = ParseWordGraph(ExampleWordGraphText(), "example");
  DecoderConfig config;
  config.beam_width = 100000;
  config.apply_corrections = false;
  config.knowledge = KnowledgeMode::kAcoustic;
  const auto result = Decode(graph, MeetingLexicon(), Models(), config);
  std::vector<std::string> sentences;
  for (const auto &d : result.ranked) {
    std::string s;
    for (const auto &w : d.state.Words(graph)) s += (s.empty() ? "" : " ") + w;
    sentences.push_back(s);
  }
  auto has = [&](std::string_view s) {
    return std::find(sentences.begin(), sentences.end(), s) != sentences.end();
  };
  EXPECT_TRUE(has(kExampleGraphSentence));
  EXPECT_TRUE(has("Ähm am sechsten April bin ich ich leider außer Hause"));
}

TEST(Decode, InterjectionsKeepPredictorContext) {
  Lexicon lexicon({MakeEntry("ich", {"U"}, {"ANIM"}), MakeEntry("ähm", {"I"}, {"NIL"}),
                   MakeEntry("habe", {"V"}, {"HAVE"})});
  const Models models = testing::ScaledModels(4, 8.0);
  const WordGraph with({{0, 9, "ich", 0.5}, {10, 19, "ähm", 0.5}, {20, 29, "habe", 0.5}});
  const WordGraph without({{0, 9, "ich", 0.5}, {10, 19, "habe", 0.5}});
  DecoderConfig config;
  config.apply_corrections = false;
  const auto a = Decode(with, lexicon, models, config);
  const auto b = Decode(without, lexicon, models, config);
  ASSERT_EQ(a.ranked.size(), 1u);
  ASSERT_EQ(b.ranked.size(), 1u);
  const SequenceState &three = a.ranked[0].state;
  const SequenceState &two = b.ranked[0].state;
  EXPECT_EQ(three.annotations[1].deleted, DeletionReason::kInterjection);
  EXPECT_DOUBLE_EQ(three.score.steps()[1].syntactic, 1.0);
  EXPECT_DOUBLE_EQ(three.score.steps()[2].syntactic, two.score.steps()[1].syntactic);
  EXPECT_DOUBLE_EQ(three.score.steps()[2].semantic, two.score.steps()[1].semantic);
  EXPECT_EQ(three.predictor, two.predictor);
  EXPECT_EQ(three.tagger, two.tagger);
}

TEST(RankingName, RoundTrip) {
  for (auto mode : {RankingMode::kNormalized, RankingMode::kRaw}) {
    EXPECT_EQ(RankingFromName(RankingName(mode)), mode);
  }
  for (auto mode : {KnowledgeMode::kAcoustic, KnowledgeMode::kAcousticSyntax, KnowledgeMode::kFull}) {
    EXPECT_EQ(KnowledgeFromName(KnowledgeName(mode)), mode);
  }
  EXPECT_FALSE(RankingFromName("best").has_value());
  EXPECT_FALSE(KnowledgeFromName("").has_value());
}

}  // namespace
}  // namespace flatscreen
