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

#include "flatscreen/ngram.h"

#include <algorithm>
#include <numeric>

#include "flatscreen/error.h"
#include "flatscreen/parallel.h"
#include "flatscreen/text_util.h"

namespace flatscreen {

NgramModel NgramModel::Fit(std::span<const LabelSequence> sequences, size_t n,
                           Smoothing smoothing, size_t vocabulary) {
  if (n < 1 || n > kMaxOrder) throw Error("n-gram order must lie in 1..5");
  if (vocabulary == 0) throw Error("n-gram vocabulary must not be empty");
  NgramModel model;
  model.order_ = n;
  model.vocabulary_ = vocabulary;
  model.smoothing_ = smoothing;
  model.tables_.resize(n);

  size_t tokens = 0;
  for (const auto &sequence : sequences) {
    for (size_t i = 0; i < sequence.size(); ++i) {
      const size_t label = sequence[i];
      if (label >= vocabulary) throw Error("n-gram label out of range");
      for (size_t m = 1; m <= n; ++m) {
        LabelSequence context =
            model.Context(std::span<const size_t>(sequence.data(), i), m);
        Counts &counts = model.tables_[m - 1][context];
        if (counts.next.empty()) counts.next.assign(vocabulary, 0.0);
        if (counts.next[label] == 0.0) counts.types += 1.0;
        counts.next[label] += 1.0;
        counts.total += 1.0;
      }
      ++tokens;
    }
  }
  if (tokens == 0) throw Error("n-gram training data is empty");
  return model;
}

LabelSequence NgramModel::Context(std::span<const size_t> history, size_t m) const {
  const size_t start_symbol = vocabulary_;
  LabelSequence context(m - 1, start_symbol);
  const size_t take = std::min(m - 1, history.size());
  std::copy(history.end() - static_cast<std::ptrdiff_t>(take), history.end(),
            context.end() - static_cast<std::ptrdiff_t>(take));
  return context;
}

const NgramModel::Counts *NgramModel::Find(size_t m, const LabelSequence &context) const {
  const auto &table = tables_[m - 1];
  auto it = table.find(context);
  return it == table.end() ? nullptr : &it->second;
}

std::vector<double> NgramModel::Predict(std::span<const size_t> history) const {
  const Counts *unigram = Find(1, {});
  std::vector<double> p(vocabulary_);

  if (smoothing_ == Smoothing::kNone) {
    for (size_t m = order_; m > 0; --m) {
      const Counts *counts = Find(m, Context(history, m));
      if (counts && counts->total > 0.0) {
        for (size_t w = 0; w < vocabulary_; ++w) p[w] = counts->next[w] / counts->total;
        return p;
      }
    }
    return p;  // unreachable: the unigram table is never empty
  }

  const double denominator = unigram->total + static_cast<double>(vocabulary_);
  for (size_t w = 0; w < vocabulary_; ++w) p[w] = (unigram->next[w] + 1.0) / denominator;
  for (size_t m = 2; m <= order_; ++m) {
    const Counts *counts = Find(m, Context(history, m));
    if (!counts) continue;
    const double norm = counts->total + counts->types;
    for (size_t w = 0; w < vocabulary_; ++w) {
      p[w] = (counts->next[w] + counts->types * p[w]) / norm;
    }
  }
  return p;
}

namespace {

class NgramPredictor : public SequencePredictor {
 public:
  explicit NgramPredictor(const NgramModel &model) : model_(model) {}
  void Reset() override { history_.clear(); }
  void Observe(size_t label) override { history_.push_back(label); }
  std::vector<double> Predict() const override { return model_.Predict(history_); }

 private:
  const NgramModel &model_;
  LabelSequence history_;
};

class NetworkPredictor : public SequencePredictor {
 public:
  explicit NetworkPredictor(const Network &network) : network_(network) { Reset(); }
  void Reset() override {
    context_ = network_.InitialContext();
    output_.assign(network_.spec().n_output, 0.0);
  }
  void Observe(size_t label) override {
    std::vector<double> input(network_.spec().n_input, 0.0);
    input.at(label) = 1.0;
    auto activation = network_.Forward(input, context_);
    output_ = std::move(activation.output);
    if (network_.spec().recurrent) context_ = std::move(activation.hidden);
  }
  std::vector<double> Predict() const override { return output_; }

 private:
  const Network &network_;
  std::vector<double> context_;
  std::vector<double> output_;
};

}  // namespace

PredictorFactory NgramPredictorFactory(const NgramModel &model) {
  return [&model] { return std::make_unique<NgramPredictor>(model); };
}

PredictorFactory NetworkPredictorFactory(const Network &network) {
  return [&network] { return std::make_unique<NetworkPredictor>(network); };
}

double ExclusionCurve::Mean() const {
  if (accuracy.empty()) return 0.0;
  return std::accumulate(accuracy.begin(), accuracy.end(), 0.0) /
         static_cast<double>(accuracy.size());
}

ExclusionCurve ComputeExclusionCurve(const PredictorFactory &factory,
                                     std::span<const LabelSequence> sequences,
                                     size_t vocabulary, size_t threads) {
  if (vocabulary == 0) throw Error("exclusion curve needs a non-empty vocabulary");
  // survivors[s][r]: positions of sequence s whose true label is excluded
  // only after r others, i.e. survives k <= r.
  std::vector<std::vector<size_t>> survivors(sequences.size());
  ParallelFor(sequences.size(), threads, [&](size_t s) {
    const LabelSequence &sequence = sequences[s];
    survivors[s].assign(vocabulary, 0);
    auto predictor = factory();
    predictor->Reset();
    std::vector<size_t> order(vocabulary);
    for (size_t i = 0; i + 1 < sequence.size(); ++i) {
      predictor->Observe(sequence[i]);
      const std::vector<double> scores = predictor->Predict();
      if (scores.size() != vocabulary) throw DimensionError("predictor output size mismatch");
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return scores[a] < scores[b];
        return a > b;
      });
      const size_t truth = sequence[i + 1];
      const size_t rank = static_cast<size_t>(
          std::find(order.begin(), order.end(), truth) - order.begin());
      survivors[s][rank] += 1;
    }
  });

  std::vector<size_t> at_rank(vocabulary, 0);
  size_t positions = 0;
  for (const auto &counts : survivors) {
    for (size_t r = 0; r < vocabulary; ++r) {
      at_rank[r] += counts[r];
      positions += counts[r];
    }
  }
  if (positions == 0) throw Error("exclusion curve has no positions to score");

  ExclusionCurve curve;
  curve.positions = positions;
  curve.accuracy.resize(vocabulary);
  // A label at exclusion rank r survives exactly the k with k <= r.
  size_t surviving = positions;
  for (size_t k = 0; k < vocabulary; ++k) {
    curve.accuracy[k] = static_cast<double>(surviving) / static_cast<double>(positions);
    surviving -= at_rank[k];
  }
  return curve;
}

std::string FormatCurves(std::span<const std::string> names,
                         std::span<const ExclusionCurve> curves) {
  if (names.size() != curves.size()) throw Error("curve names and curves differ in count");
  std::string out = "k";
  for (const auto &name : names) out += "\t" + name;
  out += "\n";
  const size_t rows = curves.empty() ? 0 : curves.front().accuracy.size();
  for (size_t k = 0; k < rows; ++k) {
    out += std::to_string(k);
    for (const auto &curve : curves) out += "\t" + FormatDouble(curve.accuracy.at(k));
    out += "\n";
  }
  return out;
}

}  // namespace flatscreen
