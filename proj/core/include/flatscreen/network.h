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

// Feedforward and simple recurrent (Elman) networks.
//
// A network has one sigmoid hidden layer and a sigmoid output layer. A
// recurrent network additionally reads a context layer the size of its
// hidden layer; the caller copies the hidden activations of one step into
// the context of the next. Training uses the generalized delta rule with
// online updates on the summed squared error, treating the context as a
// frozen extra input (no unrolling through time).

#ifndef FLATSCREEN_NETWORK_H_
#define FLATSCREEN_NETWORK_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatscreen {

struct NetworkSpec {
  size_t n_input = 0;
  size_t n_hidden = 0;
  size_t n_output = 0;
  bool recurrent = false;

  // Throws Error if any count is zero.
  void Validate() const;

  size_t context_size() const { return recurrent ? n_hidden : 0; }

  // Columns of the hidden weight matrix: inputs, context, bias.
  size_t hidden_columns() const { return n_input + context_size() + 1; }

  // Columns of the output weight matrix: hidden units, bias.
  size_t output_columns() const { return n_hidden + 1; }

  size_t WeightCount() const {
    return n_hidden * hidden_columns() + n_output * output_columns();
  }

  bool operator==(const NetworkSpec &) const = default;
};

class Network {
 public:
  struct Activation {
    std::vector<double> output;
    std::vector<double> hidden;
  };

  Network() = default;

  // All weights zero.
  explicit Network(const NetworkSpec &spec, std::string name = "");

  const NetworkSpec &spec() const { return spec_; }
  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Row-major [n_hidden x hidden_columns] and [n_output x output_columns];
  // the last column of each row is the bias.
  std::span<double> hidden_weights() { return hidden_weights_; }
  std::span<const double> hidden_weights() const { return hidden_weights_; }
  std::span<double> output_weights() { return output_weights_; }
  std::span<const double> output_weights() const { return output_weights_; }

  // Both matrices as one flat view order: hidden weights, then output.
  size_t WeightCount() const { return spec_.WeightCount(); }
  double &Weight(size_t index);
  double Weight(size_t index) const;

  // Pure function of (weights, input, context). `context` must have
  // n_hidden elements for recurrent networks and is ignored otherwise (it
  // may be empty). Output elements lie strictly inside (0, 1).
  Activation Forward(std::span<const double> input,
                     std::span<const double> context) const;

  // Allocation-free variant for hot loops.
  void Forward(std::span<const double> input, std::span<const double> context,
               std::span<double> hidden, std::span<double> output) const;

  // All-zero context of the right size.
  std::vector<double> InitialContext() const {
    return std::vector<double>(spec_.context_size(), 0.0);
  }

  bool operator==(const Network &) const = default;

 private:
  NetworkSpec spec_;
  std::string name_;
  std::vector<double> hidden_weights_;
  std::vector<double> output_weights_;
};

// Weights drawn uniformly from [-0.1, 0.1]; deterministic per seed.
Network InitNetwork(const NetworkSpec &spec, uint64_t seed,
                    std::string name = "");

double Sigmoid(double x);

// Collapses a two-unit (plausible, implausible) output into one value:
// o1 * (1 - o2). Both inputs must lie in [0, 1].
double CombineTwoUnitOutput(double o1, double o2);

struct Pattern {
  std::vector<double> input;
  std::vector<double> target;
};

// Context resets to zero at the start of every sequence.
using Sequence = std::vector<Pattern>;

struct SequenceDataset {
  std::vector<Sequence> sequences;

  size_t PatternCount() const;
  bool empty() const { return PatternCount() == 0; }

  // Throws DimensionError when a pattern does not fit the spec.
  void CheckCompatible(const NetworkSpec &spec) const;
};

struct TrainingConfig {
  int epochs = 3000;
  double learning_rate = 0.001;
  size_t hidden_units = 14;
  uint64_t seed = 1;
  // Visit sequences in a fresh seeded order every epoch instead of dataset
  // order.
  bool shuffle = false;

  void Validate() const;
};

// Hidden-layer sizes explored when sweeping architectures.
inline constexpr size_t kMinHiddenUnits = 7;
inline constexpr size_t kMaxHiddenUnits = 28;

struct TrainingResult {
  Network network;
  // Mean squared error per epoch, measured on each pattern before its
  // update: sum (t - o)^2 / (patterns * outputs).
  std::vector<double> loss_history;
};

// Online training in dataset order. Throws Error on an empty dataset.
TrainingResult Train(Network network, const SequenceDataset &dataset,
                     const TrainingConfig &config);

// Initializes a network of config.hidden_units with config.seed and trains
// it.
TrainingResult TrainNew(size_t n_input, size_t n_output, bool recurrent,
                        const SequenceDataset &dataset,
                        const TrainingConfig &config, std::string name = "");

// Derivatives of E = 1/2 sum (t - o)^2 with respect to every weight, laid
// out like the weight matrices.
struct Gradient {
  std::vector<double> hidden;
  std::vector<double> output;
};

struct GradientSample {
  std::vector<double> input;
  std::vector<double> context;
  std::vector<double> target;
};

Gradient ComputeGradient(const Network &network, const GradientSample &sample);

double SquaredError(const Network &network, const GradientSample &sample);

using GradientFn =
    std::function<Gradient(const Network &, const GradientSample &)>;

// Maximum relative error |a - n| / max(|a|, |n|) between analytic gradients
// and central finite differences over all weights. Pairs where both values
// are below 1e-8 count as agreeing. Requires epsilon in [1e-7, 1e-3].
double GradientCheck(const Network &network, const GradientSample &sample,
                     double epsilon,
                     const GradientFn &gradient = ComputeGradient);

// Fraction of patterns whose output argmax equals the target argmax, with
// contexts reset per sequence.
double ArgmaxAccuracy(const Network &network, const SequenceDataset &dataset);

// Versioned text format with round-trip exact weights.
inline constexpr int kNetworkFormatVersion = 1;
std::string FormatNetwork(const Network &network);
Network ParseNetwork(std::string_view text, const std::string &source);
void SaveNetwork(const Network &network, const std::filesystem::path &path);
Network LoadNetwork(const std::filesystem::path &path);

}  // namespace flatscreen

#endif  // FLATSCREEN_NETWORK_H_
