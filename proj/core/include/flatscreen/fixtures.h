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

// Built-in meeting-domain lexicon, hand-labelled example utterances and the
// small example word graph.

#ifndef FLATSCREEN_FIXTURES_H_
#define FLATSCREEN_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

#include "flatscreen/corpus.h"
#include "flatscreen/lexicon.h"

namespace flatscreen {

// Lexicon covering the fixtures and the synthetic grammar.
const Lexicon &MeetingLexicon();
std::string_view MeetingLexiconText();

// Example utterances with hand-entered gold labels. All turns are train
// turns with ids "fx-<n>".
const AnnotatedCorpus &FixtureCorpus();

// Parses the compact notation used for fixtures: tokens separated by
// spaces, fields separated by '|':
//
//   word|bsyn|absyn|bsem|absem|start[|deletion]
AnnotatedToken ParseCompactToken(std::string_view spec);
Utterance ParseCompactUtterance(std::string_view spec);

// Fixture utterances used as tagging regression targets.
inline constexpr std::string_view kRubbishMeanId = "fx-rubbish-mean";
inline constexpr std::string_view kRubbishHadId = "fx-rubbish-had";
const Utterance &FixtureUtterance(std::string_view turn_id);

// Word graph for "Ähm am sechsten April bin ich leider außer Hause" with its
// competing hypotheses, in the word-graph file format.
std::string_view ExampleWordGraphText();
inline constexpr std::string_view kExampleGraphSentence =
    "Ähm am sechsten April bin ich leider außer Hause";

}  // namespace flatscreen

#endif  // FLATSCREEN_FIXTURES_H_
