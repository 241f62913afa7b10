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

#include "flatscreen/predictor.h"

#include <cmath>
#include <limits>

#include "flatscreen/error.h"

namespace flatscreen {

PredictorState InitialPredictorState(const Models &models) {
  PredictorState state;
  state.syn_context = models.net(NetId::kBasSynPre).InitialContext();
  state.sem_context = models.net(NetId::kBasSemPre).InitialContext();
  return state;
}

CategoryVector PredictNext(Axis axis, PredictorState &state,
                           const Models &models, const CategoryVector &current) {
  if (axis != Axis::kBasicSyn && axis != Axis::kBasicSem) {
    throw DimensionError("prediction works on basic axes only");
  }
  if (current.axis() != axis) {
    throw DimensionError("prediction input is on the wrong axis");
  }
  const bool syn = axis == Axis::kBasicSyn;
  const Network &net = models.net(syn ? NetId::kBasSynPre : NetId::kBasSemPre);
  std::vector<double> &context = syn ? state.syn_context : state.sem_context;
  auto activation = net.Forward(current.values(), context);
  context = std::move(activation.hidden);
  CategoryVector prediction(axis, std::move(activation.output));
  (syn ? state.syn_prediction : state.sem_prediction) = prediction;
  return prediction;
}

double StepPlausibility(const CategoryVector &predicted,
                        const CategoryVector &disambiguated) {
  if (predicted.axis() != disambiguated.axis()) {
    throw DimensionError("prediction and disambiguation axes differ");
  }
  return predicted[disambiguated.Argmax()];
}

double CombinedStep(double acoustic, double syntactic, double semantic) {
  for (double v : {acoustic, syntactic, semantic}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error("step plausibilities must lie in [0,1]");
    }
  }
  return acoustic * syntactic * semantic;
}

StepScore MakeStepScore(double acoustic, double syntactic, double semantic) {
  return {acoustic, syntactic, semantic,
          CombinedStep(acoustic, syntactic, semantic)};
}

std::string_view RankingName(RankingMode mode) {
  return mode == RankingMode::kRaw ? "raw" : "normalized";
}

std::optional<RankingMode> RankingFromName(std::string_view name) {
  if (name == "raw") return RankingMode::kRaw;
  if (name == "normalized") return RankingMode::kNormalized;
  return std::nullopt;
}

void SequenceScore::Append(const StepScore &step) {
  steps_.push_back(step);
  log_sum_ += step.combined > 0.0 ? std::log(step.combined)
                                  : -std::numeric_limits<double>::infinity();
}

double SequenceScore::Raw() const { return std::exp(log_sum_); }

double SequenceScore::Normalized() const {
  if (steps_.empty()) return 1.0;
  return std::exp(log_sum_ / static_cast<double>(steps_.size()));
}

double SequenceScore::RankKey(RankingMode mode) const {
  if (mode == RankingMode::kRaw || steps_.empty()) return log_sum_;
  return log_sum_ / static_cast<double>(steps_.size());
}

SequenceScore ScoreSequence(std::span<const StepScore> steps) {
  if (steps.empty()) throw Error("a sequence score needs at least one step");
  SequenceScore score;
  for (const auto &step : steps) score.Append(step);
  return score;
}

}  // namespace flatscreen
