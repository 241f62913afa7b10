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

#include "flatscreen/category.h"

#include <cmath>
#include <utility>

#include "flatscreen/error.h"

namespace flatscreen {

namespace {

using Label = CategoryScheme::Label;

std::vector<Label> BasicSynLabels() {
  return {{"N", "noun"},        {"V", "verb"},        {"R", "preposition"},
          {"U", "pronoun"},     {"M", "numeral"},     {"P", "participle"},
          {"/", "pause"},       {"J", "adjective"},   {"A", "adverb"},
          {"C", "conjunction"}, {"D", "determiner"},  {"I", "interjection"},
          {"O", "other"}};
}

std::vector<Label> AbsSynLabels() {
  return {{"VG", "verb group"},        {"NG", "noun group"},
          {"AG", "adverbial group"},   {"PG", "prepositional group"},
          {"CG", "conjunction group"}, {"MG", "modus group"},
          {"SG", "special group"},     {"IG", "interjection group"}};
}

std::vector<Label> BasicSemLabels() {
  return {{"SEL", "select"},     {"SUG", "suggest"},
          {"MEET", "meet"},      {"UTTER", "utter"},
          {"IS", "is"},          {"HAVE", "have"},
          {"MOVE", "move"},      {"AUX", "aux"},
          {"QUEST", "question"}, {"PHYS", "physical"},
          {"ANIM", "animate"},   {"ABS", "abstract"},
          {"HERE", "here"},      {"SRC", "source"},
          {"DEST", "destination"}, {"LOC", "location"},
          {"TIME", "time"},      {"NO", "negative evaluation"},
          {"YES", "positive evaluation"}, {"NIL", "nil"}};
}

std::vector<Label> AbsSemLabels() {
  return {{"ACT", "action"},        {"AUX", "aux-action"},
          {"AGENT", "agent"},       {"OBJ", "object"},
          {"RECIP", "recipient"},   {"INSTR", "instrument"},
          {"MANNER", "manner"},     {"TM-AT", "time-at"},
          {"TM-FRM", "time-from"},  {"TM-TO", "time-to"},
          {"LC-AT", "loc-at"},      {"LC-FRM", "loc-from"},
          {"LC-TO", "loc-to"},      {"CONF", "confirmation"},
          {"NEG", "negation"},      {"QUEST", "question"},
          {"MISC", "misc"}};
}

}  // namespace

std::string_view AxisName(Axis axis) {
  switch (axis) {
    case Axis::kBasicSyn: return "bsyn";
    case Axis::kAbsSyn: return "absyn";
    case Axis::kBasicSem: return "bsem";
    case Axis::kAbsSem: return "absem";
  }
  return "?";
}

std::optional<Axis> AxisFromName(std::string_view name) {
  for (Axis axis : kAllAxes) {
    if (AxisName(axis) == name) return axis;
  }
  return std::nullopt;
}

size_t AxisSize(Axis axis) { return CategoryScheme::Get(axis).size(); }

CategoryScheme::CategoryScheme(Axis axis, std::vector<Label> labels)
    : axis_(axis), labels_(std::move(labels)) {}

const CategoryScheme &CategoryScheme::Get(Axis axis) {
  static const CategoryScheme kSchemes[] = {
      BuildScheme(Axis::kBasicSyn), BuildScheme(Axis::kAbsSyn),
      BuildScheme(Axis::kBasicSem), BuildScheme(Axis::kAbsSem)};
  return kSchemes[static_cast<int>(axis)];
}

const std::string &CategoryScheme::abbrev(size_t index) const {
  return labels_.at(index).abbrev;
}

std::optional<size_t> CategoryScheme::Find(std::string_view abbrev) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].abbrev == abbrev) return i;
  }
  return std::nullopt;
}

size_t CategoryScheme::IndexOf(std::string_view abbrev) const {
  auto index = Find(abbrev);
  if (!index) {
    throw Error("unknown " + std::string(AxisName(axis_)) + " label '" +
                std::string(abbrev) + "'");
  }
  return *index;
}

CategoryScheme BuildScheme(Axis axis) {
  switch (axis) {
    case Axis::kBasicSyn: return CategoryScheme(axis, BasicSynLabels());
    case Axis::kAbsSyn: return CategoryScheme(axis, AbsSynLabels());
    case Axis::kBasicSem: return CategoryScheme(axis, BasicSemLabels());
    case Axis::kAbsSem: return CategoryScheme(axis, AbsSemLabels());
  }
  throw Error("invalid axis");
}

size_t Argmax(std::span<const double> values) {
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

CategoryVector::CategoryVector(Axis axis)
    : axis_(axis), values_(AxisSize(axis), 0.0) {}

CategoryVector::CategoryVector(Axis axis, std::vector<double> values)
    : axis_(axis), values_(std::move(values)) {
  if (values_.size() != AxisSize(axis_)) {
    throw DimensionError("vector of length " + std::to_string(values_.size()) +
                         " on axis " + std::string(AxisName(axis_)) +
                         " (expected " + std::to_string(AxisSize(axis_)) +
                         ")");
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error("category vector element outside [0,1]");
    }
  }
}

CategoryVector CategoryVector::OneHot(Axis axis, size_t index) {
  CategoryVector v(axis);
  v.Set(index, 1.0);
  return v;
}

CategoryVector CategoryVector::OneHot(Axis axis, std::string_view abbrev) {
  return OneHot(axis, CategoryScheme::Get(axis).IndexOf(abbrev));
}

void CategoryVector::Set(size_t index, double value) {
  if (index >= values_.size()) throw DimensionError("index out of range");
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error("category vector element outside [0,1]");
  }
  values_[index] = value;
}

const std::string &CategoryVector::ArgmaxLabel() const {
  return CategoryScheme::Get(axis_).abbrev(Argmax());
}

}  // namespace flatscreen
