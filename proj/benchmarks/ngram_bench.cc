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

#include <benchmark/benchmark.h>

#include "flatscreen/category.h"
#include "flatscreen/harness.h"
#include "flatscreen/ngram.h"
#include "flatscreen/synthetic.h"

namespace flatscreen {
namespace {

std::vector<LabelSequence> Sequences() {
  static const std::vector<LabelSequence> sequences =
      GoldLabelSequences(GenerateSynthetic(GrammarConfig(), 300, 1), Axis::kBasicSyn);
  return sequences;
}

void BM_NgramFit(benchmark::State &state) {
  const auto sequences = Sequences();
  const size_t n = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    auto model = NgramModel::Fit(sequences, n, Smoothing::kWittenBell,
                                 AxisSize(Axis::kBasicSyn));
    benchmark::DoNotOptimize(model.order());
  }
}
BENCHMARK(BM_NgramFit)->DenseRange(1, 5);

void BM_NgramPredict(benchmark::State &state) {
  const auto sequences = Sequences();
  const size_t n = static_cast<size_t>(state.range(0));
  const auto model =
      NgramModel::Fit(sequences, n, Smoothing::kWittenBell, AxisSize(Axis::kBasicSyn));
  const LabelSequence &history = sequences.front();
  for (auto _ : state) {
    auto p = model.Predict(history);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_NgramPredict)->DenseRange(1, 5);

void BM_ExclusionCurve(benchmark::State &state) {
  const auto sequences = Sequences();
  const auto model =
      NgramModel::Fit(sequences, 3, Smoothing::kWittenBell, AxisSize(Axis::kBasicSyn));
  const auto factory = NgramPredictorFactory(model);
  for (auto _ : state) {
    auto curve = ComputeExclusionCurve(factory, sequences, AxisSize(Axis::kBasicSyn));
    benchmark::DoNotOptimize(curve.accuracy.data());
  }
}
BENCHMARK(BM_ExclusionCurve);

}  // namespace
}  // namespace flatscreen
