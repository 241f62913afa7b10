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

// Next-category prediction and the per-step plausibilities that score word
// hypothesis sequences.

#ifndef FLATSCREEN_PREDICTOR_H_
#define FLATSCREEN_PREDICTOR_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "flatscreen/category.h"
#include "flatscreen/models.h"

namespace flatscreen {

struct PredictorState {
  std::vector<double> syn_context;
  std::vector<double> sem_context;
  // Predictions for the next word, absent before the first word.
  std::optional<CategoryVector> syn_prediction;
  std::optional<CategoryVector> sem_prediction;

  bool operator==(const PredictorState &) const = default;
};

PredictorState InitialPredictorState(const Models &models);

// Feeds the disambiguated basic vector of the latest word (kBasicSyn or
// kBasicSem) and returns the distribution predicted for the next word. The
// prediction is also stored in the state.
CategoryVector PredictNext(Axis axis, PredictorState &state,
                           const Models &models, const CategoryVector &current);

// predicted[argmax(disambiguated)]. Throws DimensionError on axis mismatch.
double StepPlausibility(const CategoryVector &predicted,
                        const CategoryVector &disambiguated);

// a * s * m; every factor must lie in [0, 1].
double CombinedStep(double acoustic, double syntactic, double semantic);

struct StepScore {
  double acoustic = 1.0;
  double syntactic = 1.0;
  double semantic = 1.0;
  double combined = 1.0;

  bool operator==(const StepScore &) const = default;
};

StepScore MakeStepScore(double acoustic, double syntactic, double semantic);

enum class RankingMode { kNormalized, kRaw };

std::string_view RankingName(RankingMode mode);
std::optional<RankingMode> RankingFromName(std::string_view name);

class SequenceScore {
 public:
  SequenceScore() = default;

  void Append(const StepScore &step);

  const std::vector<StepScore> &steps() const { return steps_; }
  size_t length() const { return steps_.size(); }
  double log_sum() const { return log_sum_; }

  // Product of the combined steps.
  double Raw() const;
  // Geometric mean exp(log_sum / length); 1 for an empty score.
  double Normalized() const;

  // Monotone ranking key: log_sum for kRaw, log_sum / length for
  // kNormalized. Avoids underflow on long sequences.
  double RankKey(RankingMode mode) const;

  bool operator==(const SequenceScore &) const = default;

 private:
  std::vector<StepScore> steps_;
  double log_sum_ = 0.0;
};

// Throws Error when `steps` is empty.
SequenceScore ScoreSequence(std::span<const StepScore> steps);

}  // namespace flatscreen

#endif  // FLATSCREEN_PREDICTOR_H_
