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

// Category n-gram models and exclusion curves.
//
// Smoothing is Witten-Bell interpolation down to an add-one unigram:
//
//   P1(w)     = (c(w) + 1) / (N + V)
//   Pm(w | h) = (c(h w) + T(h) P(m-1)(w | h')) / (c(h) + T(h))
//
// where T(h) is the number of distinct labels seen after h and h' drops the
// oldest label of h. Histories never seen back off directly. Sequences are
// padded on the left with a start symbol.

#ifndef FLATSCREEN_NGRAM_H_
#define FLATSCREEN_NGRAM_H_

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "flatscreen/network.h"

namespace flatscreen {

enum class Smoothing { kWittenBell, kNone };

using LabelSequence = std::vector<size_t>;

class NgramModel {
 public:
  static constexpr size_t kMaxOrder = 5;

  // Throws Error unless 1 <= n <= kMaxOrder, labels < vocabulary and at
  // least one sequence is non-empty.
  static NgramModel Fit(std::span<const LabelSequence> sequences, size_t n,
                        Smoothing smoothing, size_t vocabulary);

  size_t order() const { return order_; }
  size_t vocabulary() const { return vocabulary_; }
  Smoothing smoothing() const { return smoothing_; }

  // Distribution over the next label given the preceding labels (only the
  // last n - 1 are used). Sums to 1; strictly positive under Witten-Bell.
  // Unsmoothed models use the longest seen history.
  std::vector<double> Predict(std::span<const size_t> history) const;

  bool operator==(const NgramModel &) const = default;

 private:
  struct Counts {
    std::vector<double> next;  // per label
    double total = 0.0;
    double types = 0.0;

    bool operator==(const Counts &) const = default;
  };

  // Padded context of length m - 1 for an order-m estimate.
  LabelSequence Context(std::span<const size_t> history, size_t m) const;
  const Counts *Find(size_t m, const LabelSequence &context) const;

  size_t order_ = 1;
  size_t vocabulary_ = 0;
  Smoothing smoothing_ = Smoothing::kWittenBell;
  // tables_[m - 1] maps contexts of length m - 1 to counts.
  std::vector<std::map<LabelSequence, Counts>> tables_;
};

// Stateful next-label predictor with gold histories fed in by Observe.
class SequencePredictor {
 public:
  virtual ~SequencePredictor() = default;
  virtual void Reset() = 0;
  virtual void Observe(size_t label) = 0;
  // Scores for the next label; larger is more plausible.
  virtual std::vector<double> Predict() const = 0;
};

using PredictorFactory = std::function<std::unique_ptr<SequencePredictor>()>;

PredictorFactory NgramPredictorFactory(const NgramModel &model);

// A prediction network fed one-hot labels.
PredictorFactory NetworkPredictorFactory(const Network &network);

struct ExclusionCurve {
  // accuracy[k] for k = 0 .. vocabulary - 1 excluded labels.
  std::vector<double> accuracy;
  size_t positions = 0;

  double Mean() const;
  bool operator==(const ExclusionCurve &) const = default;
};

// Every position after the first of each sequence is predicted from its
// gold history. Labels are excluded in order of increasing score; among
// equal scores the higher index goes first, so the survivor at
// k = vocabulary - 1 is the lowest-index maximum. Throws Error when there
// is no position to score.
ExclusionCurve ComputeExclusionCurve(const PredictorFactory &factory,
                                     std::span<const LabelSequence> sequences,
                                     size_t vocabulary, size_t threads = 1);

// Tab-separated table: header "k<TAB>name...", one row per k.
std::string FormatCurves(std::span<const std::string> names,
                         std::span<const ExclusionCurve> curves);

}  // namespace flatscreen

#endif  // FLATSCREEN_NGRAM_H_
