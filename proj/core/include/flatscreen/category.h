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

// Fixed category inventories for the four flat label axes and dense
// plausibility vectors over them.

#ifndef FLATSCREEN_CATEGORY_H_
#define FLATSCREEN_CATEGORY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatscreen {

enum class Axis { kBasicSyn, kAbsSyn, kBasicSem, kAbsSem };

inline constexpr std::array<Axis, 4> kAllAxes = {
    Axis::kBasicSyn, Axis::kAbsSyn, Axis::kBasicSem, Axis::kAbsSem};

// Short stable name used in files: "bsyn", "absyn", "bsem", "absem".
std::string_view AxisName(Axis axis);
std::optional<Axis> AxisFromName(std::string_view name);

// Number of labels on an axis: 13, 8, 20 and 17.
size_t AxisSize(Axis axis);

// An ordered label inventory. Label order defines vector indices and never
// changes.
class CategoryScheme {
 public:
  struct Label {
    std::string abbrev;
    std::string name;

    bool operator==(const Label &) const = default;
  };

  CategoryScheme(Axis axis, std::vector<Label> labels);

  // Shared immutable instance for an axis.
  static const CategoryScheme &Get(Axis axis);

  Axis axis() const { return axis_; }
  size_t size() const { return labels_.size(); }
  const std::vector<Label> &labels() const { return labels_; }
  const std::string &abbrev(size_t index) const;

  std::optional<size_t> Find(std::string_view abbrev) const;

  // Like Find, but throws Error for an unknown abbreviation.
  size_t IndexOf(std::string_view abbrev) const;

  bool operator==(const CategoryScheme &) const = default;

 private:
  Axis axis_;
  std::vector<Label> labels_;
};

// Builds the fixed inventory for an axis. Idempotent.
CategoryScheme BuildScheme(Axis axis);

// Index of the largest element; ties resolve to the lowest index.
size_t Argmax(std::span<const double> values);

// A plausibility vector over one axis, every element in [0, 1].
class CategoryVector {
 public:
  explicit CategoryVector(Axis axis);
  CategoryVector(Axis axis, std::vector<double> values);

  static CategoryVector OneHot(Axis axis, size_t index);
  static CategoryVector OneHot(Axis axis, std::string_view abbrev);

  Axis axis() const { return axis_; }
  size_t size() const { return values_.size(); }
  double operator[](size_t index) const { return values_[index]; }
  void Set(size_t index, double value);
  std::span<const double> values() const { return values_; }

  size_t Argmax() const { return flatscreen::Argmax(values_); }
  const std::string &ArgmaxLabel() const;

  bool operator==(const CategoryVector &) const = default;

 private:
  Axis axis_;
  std::vector<double> values_;
};

}  // namespace flatscreen

#endif  // FLATSCREEN_CATEGORY_H_
