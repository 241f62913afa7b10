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

// Word hypotheses and word graphs.
//
// Times are held as integer centiseconds so that connection tests are exact.
// File format, one hypothesis per line:
//
//   start_seconds TAB end_seconds TAB word TAB plausibility

#ifndef FLATSCREEN_WORD_GRAPH_H_
#define FLATSCREEN_WORD_GRAPH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace flatscreen {

using Centis = int64_t;

// Rounds to the nearest centisecond.
Centis SecondsToCentis(double seconds);
double CentisToSeconds(Centis centis);

// "1.23" style rendering.
std::string FormatCentis(Centis centis);

struct WordHypothesis {
  Centis start = 0;
  Centis end = 0;
  std::string word;
  double plausibility = 1.0;

  bool operator==(const WordHypothesis &) const = default;
};

// True iff 0 < second.start - first.end <= gap.
bool Connectable(const WordHypothesis &first, const WordHypothesis &second,
                 Centis gap);

class WordGraph {
 public:
  WordGraph() = default;

  // Validates every hypothesis (non-empty word, 0 <= start < end,
  // plausibility in (0, 1]) and sorts by (start, end, word, plausibility).
  // Hypothesis indices refer to the sorted order.
  explicit WordGraph(std::vector<WordHypothesis> hypotheses);

  const std::vector<WordHypothesis> &hypotheses() const { return hypotheses_; }
  const WordHypothesis &operator[](size_t index) const { return hypotheses_[index]; }
  size_t size() const { return hypotheses_.size(); }
  bool empty() const { return hypotheses_.empty(); }

  // Earliest start and latest end; 0 for an empty graph.
  Centis start_time() const { return start_time_; }
  Centis end_time() const { return end_time_; }

  // Hypotheses connectable after hypothesis `index`, in index order.
  std::vector<size_t> Successors(size_t index, Centis gap) const;

  // Hypotheses starting within `gap` of the earliest start.
  std::vector<size_t> EntryPoints(Centis gap) const;

  // A path may stop at a hypothesis ending within `gap` of the graph end.
  bool ReachesEnd(size_t index, Centis gap) const;

  // Distinct start times in increasing order.
  std::vector<Centis> StartTimes() const;

  bool operator==(const WordGraph &) const = default;

 private:
  std::vector<WordHypothesis> hypotheses_;
  Centis start_time_ = 0;
  Centis end_time_ = 0;
};

WordGraph ParseWordGraph(std::string_view text, const std::string &source);
WordGraph LoadWordGraph(const std::filesystem::path &path);
std::string FormatWordGraph(const WordGraph &graph);
void SaveWordGraph(const WordGraph &graph, const std::filesystem::path &path);

}  // namespace flatscreen

#endif  // FLATSCREEN_WORD_GRAPH_H_
