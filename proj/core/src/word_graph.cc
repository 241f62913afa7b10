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

#include "flatscreen/word_graph.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "flatscreen/error.h"
#include "flatscreen/text_util.h"

namespace flatscreen {

Centis SecondsToCentis(double seconds) {
  return static_cast<Centis>(std::llround(seconds * 100.0));
}

double CentisToSeconds(Centis centis) {
  return static_cast<double>(centis) / 100.0;
}

std::string FormatCentis(Centis centis) {
  char buffer[32];
  const char *sign = centis < 0 ? "-" : "";
  Centis magnitude = centis < 0 ? -centis : centis;
  std::snprintf(buffer, sizeof buffer, "%s%lld.%02lld", sign,
                static_cast<long long>(magnitude / 100),
                static_cast<long long>(magnitude % 100));
  return buffer;
}

bool Connectable(const WordHypothesis &first, const WordHypothesis &second,
                 Centis gap) {
  Centis delta = second.start - first.end;
  return delta > 0 && delta <= gap;
}

namespace {

void CheckHypothesis(const WordHypothesis &h) {
  if (h.word.empty()) throw Error("word hypothesis with empty word");
  if (h.start < 0) throw Error("hypothesis '" + h.word + "' starts before 0");
  if (h.start >= h.end) {
    throw Error("hypothesis '" + h.word + "': start " + FormatCentis(h.start) +
                " is not before end " + FormatCentis(h.end));
  }
  if (!(h.plausibility > 0.0 && h.plausibility <= 1.0)) {
    throw Error("hypothesis '" + h.word + "': plausibility must lie in (0,1]");
  }
}

}  // namespace

WordGraph::WordGraph(std::vector<WordHypothesis> hypotheses)
    : hypotheses_(std::move(hypotheses)) {
  for (const auto &h : hypotheses_) CheckHypothesis(h);
  std::sort(hypotheses_.begin(), hypotheses_.end(),
            [](const WordHypothesis &a, const WordHypothesis &b) {
              return std::tie(a.start, a.end, a.word, a.plausibility) <
                     std::tie(b.start, b.end, b.word, b.plausibility);
            });
  if (!hypotheses_.empty()) {
    start_time_ = hypotheses_.front().start;
    end_time_ = hypotheses_.front().end;
    for (const auto &h : hypotheses_) end_time_ = std::max(end_time_, h.end);
  }
}

std::vector<size_t> WordGraph::Successors(size_t index, Centis gap) const {
  const WordHypothesis &from = hypotheses_.at(index);
  auto first = std::upper_bound(
      hypotheses_.begin(), hypotheses_.end(), from.end,
      [](Centis t, const WordHypothesis &h) { return t < h.start; });
  std::vector<size_t> out;
  for (auto it = first; it != hypotheses_.end() && it->start - from.end <= gap;
       ++it) {
    out.push_back(static_cast<size_t>(it - hypotheses_.begin()));
  }
  return out;
}

std::vector<size_t> WordGraph::EntryPoints(Centis gap) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < hypotheses_.size(); ++i) {
    if (hypotheses_[i].start - start_time_ > gap) break;
    out.push_back(i);
  }
  return out;
}

bool WordGraph::ReachesEnd(size_t index, Centis gap) const {
  return hypotheses_.at(index).end >= end_time_ - gap;
}

std::vector<Centis> WordGraph::StartTimes() const {
  std::vector<Centis> out;
  for (const auto &h : hypotheses_) {
    if (out.empty() || out.back() != h.start) out.push_back(h.start);
  }
  return out;
}

WordGraph ParseWordGraph(std::string_view text, const std::string &source) {
  std::vector<WordHypothesis> hypotheses;
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view content = Trim(line);
    if (content.empty() || content.front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 4) {
      throw ParseError(source, line_number,
                       "expected 4 tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    WordHypothesis h;
    double start = 0, end = 0;
    if (!ParseDouble(Trim(fields[0]), &start)) {
      throw ParseError(source, line_number, "field 'start_time' is not a number");
    }
    if (!ParseDouble(Trim(fields[1]), &end)) {
      throw ParseError(source, line_number, "field 'end_time' is not a number");
    }
    h.word = std::string(Trim(fields[2]));
    if (h.word.empty()) throw ParseError(source, line_number, "field 'word' is empty");
    if (!ParseDouble(Trim(fields[3]), &h.plausibility)) {
      throw ParseError(source, line_number, "field 'plausibility' is not a number");
    }
    h.start = SecondsToCentis(start);
    h.end = SecondsToCentis(end);
    if (h.start < 0) throw ParseError(source, line_number, "field 'start_time' is negative");
    if (h.start >= h.end) {
      throw ParseError(source, line_number,
                       "field 'end_time': start must be before end");
    }
    if (!(h.plausibility > 0.0 && h.plausibility <= 1.0)) {
      throw ParseError(source, line_number,
                       "field 'plausibility' must lie in (0,1]");
    }
    hypotheses.push_back(std::move(h));
  }
  if (hypotheses.empty()) throw ParseError(source, line_number, "empty word graph");
  return WordGraph(std::move(hypotheses));
}

WordGraph LoadWordGraph(const std::filesystem::path &path) {
  return ParseWordGraph(ReadFile(path), path.string());
}

std::string FormatWordGraph(const WordGraph &graph) {
  std::string out = "# start\tend\tword\tplausibility\n";
  for (const auto &h : graph.hypotheses()) {
    out += FormatCentis(h.start) + '\t' + FormatCentis(h.end) + '\t' + h.word +
           '\t' + FormatDouble(h.plausibility) + '\n';
  }
  return out;
}

void SaveWordGraph(const WordGraph &graph, const std::filesystem::path &path) {
  WriteFile(path, FormatWordGraph(graph));
}

}  // namespace flatscreen
