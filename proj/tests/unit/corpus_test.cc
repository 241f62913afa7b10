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

#include <gtest/gtest.h>

#include "flatscreen/error.h"
#include "flatscreen/fixtures.h"
#include "flatscreen/synthetic.h"
#include "test_util.h"

namespace flatscreen {
namespace {

constexpr std::string_view kSampleText =
    "== turn t1 test\n"
    "Käse\tN\tNG\tNO\tNEG\t1\tnone\n"
    "ich\tU\tNG\tANIM\tAGENT\t1\tnone\n"
    "meine\tV\tVG\tUTTER\tACT\t1\tnone\n"
    "natürlich\tA\tSG\tNIL\tMISC\t1\tnone\n"
    "März\tN\tNG\tTIME\tTM-AT\t1\tnone\n";

TEST(ParseCorpus, SingleUtterance) {
  const auto corpus = ParseCorpus(kSampleText, "sample");
  ASSERT_EQ(corpus.turns.size(), 1u);
  EXPECT_EQ(corpus.turns[0].split, SplitKind::kTest);
  ASSERT_EQ(corpus.UtteranceCount(), 1u);
  const auto &tokens = corpus.turns[0].utterances[0].tokens;
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[2], MakeToken("meine", "V", "VG", "UTTER", "ACT", true));
  EXPECT_EQ(tokens[4].label(Axis::kAbsSem), CategoryScheme::Get(Axis::kAbsSem).IndexOf("TM-AT"));
  EXPECT_EQ(corpus.turns[0].utterances[0].Words(),
            (std::vector<std::string>{"Käse", "ich", "meine", "natürlich", "März"}));
}

TEST(ParseCorpus, LabelTypoNamesTheToken) {
  std::string text(kSampleText);
  text.replace(text.find("VG"), 2, "VGG");
  try {
    ParseCorpus(text, "typo.corpus");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("VGG"), std::string::npos) << e.what();
  }
}

TEST(ParseCorpus, DuplicateTurnIdAcrossSplits) {
  const std::string text = std::string(kSampleText) + "\n== turn t1 train\nja\tP\tCG\tYES\tCONF\t1\tnone\n";
  try {
    ParseCorpus(text, "dup");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("split error"), std::string::npos) << e.what();
  }
}

TEST(ParseCorpus, MalformedRecords) {
  EXPECT_THROW(ParseCorpus("ja\tP\tCG\tYES\tCONF\t1\tnone\n", "x"), ParseError);
  EXPECT_THROW(ParseCorpus("== turn a train\nja\tP\tCG\tYES\tCONF\t2\tnone\n", "x"), ParseError);
  EXPECT_THROW(ParseCorpus("== turn a train\nja\tP\tCG\tYES\tCONF\t1\tgone\n", "x"), ParseError);
  EXPECT_THROW(ParseCorpus("== turn a dev\nja\tP\tCG\tYES\tCONF\t1\tnone\n", "x"), ParseError);
  EXPECT_THROW(ParseCorpus("== turn a train\nja\tP\tCG\tYES\n", "x"), ParseError);
}

TEST(Corpus, RoundTripOfFixturesAndSynthetic) {
  const AnnotatedCorpus &fixtures = FixtureCorpus();
  EXPECT_EQ(ParseCorpus(FormatCorpus(fixtures), "rt"), fixtures);
  const auto synthetic = GenerateSynthetic({}, 60, 4);
  EXPECT_EQ(ParseCorpus(FormatCorpus(synthetic), "rt"), synthetic);
  testing::TempDir dir;
  SaveCorpus(synthetic, dir.path() / "c.corpus");
  EXPECT_EQ(LoadCorpus(dir.path() / "c.corpus"), synthetic);
}

TEST(Corpus, SubsetKeepsTurnOrder) {
  const auto corpus = GenerateSynthetic({}, 90, 2);
  const auto train = corpus.Subset(SplitKind::kTrain);
  const auto test = corpus.Subset(SplitKind::kTest);
  EXPECT_EQ(train.turns.size() + test.turns.size(), corpus.turns.size());
  EXPECT_EQ(train.UtteranceCount() + test.UtteranceCount(), corpus.UtteranceCount());
  for (const auto &t : train.turns) EXPECT_EQ(t.split, SplitKind::kTrain);
  for (const auto &t : test.turns) EXPECT_EQ(t.split, SplitKind::kTest);
}

TEST(ValidateCorpus, RejectsBrokenRecords) {
  AnnotatedCorpus corpus;
  corpus.turns.push_back({"a", SplitKind::kTrain, {}});
  EXPECT_THROW(ValidateCorpus(corpus), Error);
  corpus.turns[0].utterances.push_back({{MakeToken("ja", "P", "CG", "YES", "CONF", true)}});
  EXPECT_NO_THROW(ValidateCorpus(corpus));
  corpus.turns[0].utterances[0].tokens[0].labels[1] = 99;
  EXPECT_THROW(ValidateCorpus(corpus), Error);
}

TEST(GoldPhrases, PartitionSurvivors) {
  const Utterance u = ParseCompactUtterance(
      "ähm|I|IG|NIL|MISC|1|interjection von|R|PG|SRC|TM-FRM|1 neun|M|PG|TIME|TM-FRM|0 "
      "bis|R|PG|DEST|TM-TO|1 vier|M|PG|TIME|TM-TO|0 Uhr|N|PG|TIME|TM-TO|0");
  const auto phrases = GoldPhrases(u);
  ASSERT_EQ(phrases.size(), 2u);
  EXPECT_EQ(phrases[0].tokens, (std::vector<size_t>{1, 2}));
  EXPECT_EQ(phrases[1].tokens, (std::vector<size_t>{3, 4, 5}));
  EXPECT_EQ(phrases[1].abs_sem, CategoryScheme::Get(Axis::kAbsSem).IndexOf("TM-TO"));
}

TEST(DeletionNames, RoundTrip) {
  for (auto reason : {DeletionReason::kNone, DeletionReason::kPause, DeletionReason::kInterjection,
                      DeletionReason::kWordRepair, DeletionReason::kPhraseRepair}) {
    EXPECT_EQ(DeletionFromName(DeletionName(reason)), reason);
  }
  EXPECT_EQ(DeletionReportName(DeletionReason::kWordRepair), "word-repair");
}

}  // namespace
}  // namespace flatscreen
