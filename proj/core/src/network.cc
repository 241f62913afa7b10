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

#include "flatscreen/network.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flatscreen/category.h"
#include "flatscreen/error.h"
#include "flatscreen/random.h"
#include "flatscreen/text_util.h"

namespace flatscreen {

void NetworkSpec::Validate() const {
  if (n_input == 0 || n_hidden == 0 || n_output == 0) {
    throw Error("network spec needs at least one input, hidden and output "
                "unit (got " + std::to_string(n_input) + "-" +
                std::to_string(n_hidden) + "-" + std::to_string(n_output) +
                ")");
  }
}

Network::Network(const NetworkSpec &spec, std::string name)
    : spec_(spec), name_(std::move(name)) {
  spec_.Validate();
  hidden_weights_.assign(spec_.n_hidden * spec_.hidden_columns(), 0.0);
  output_weights_.assign(spec_.n_output * spec_.output_columns(), 0.0);
}

double &Network::Weight(size_t index) {
  if (index < hidden_weights_.size()) return hidden_weights_[index];
  return output_weights_.at(index - hidden_weights_.size());
}

double Network::Weight(size_t index) const {
  if (index < hidden_weights_.size()) return hidden_weights_[index];
  return output_weights_.at(index - hidden_weights_.size());
}

double Sigmoid(double x) {
  // Clamping keeps the result strictly inside (0, 1) in double precision.
  x = std::clamp(x, -30.0, 30.0);
  return 1.0 / (1.0 + std::exp(-x));
}

double CombineTwoUnitOutput(double o1, double o2) {
  if (!(o1 >= 0.0 && o1 <= 1.0) || !(o2 >= 0.0 && o2 <= 1.0)) {
    throw Error("two-unit outputs must lie in [0,1]");
  }
  return o1 * (1.0 - o2);
}

void Network::Forward(std::span<const double> input,
                      std::span<const double> context,
                      std::span<double> hidden,
                      std::span<double> output) const {
  const size_t n_in = spec_.n_input;
  const size_t n_ctx = spec_.context_size();
  const size_t hcols = spec_.hidden_columns();
  const size_t ocols = spec_.output_columns();
  for (size_t j = 0; j < spec_.n_hidden; ++j) {
    const double *row = hidden_weights_.data() + j * hcols;
    double sum = row[hcols - 1];
    for (size_t i = 0; i < n_in; ++i) sum += row[i] * input[i];
    for (size_t c = 0; c < n_ctx; ++c) sum += row[n_in + c] * context[c];
    hidden[j] = Sigmoid(sum);
  }
  for (size_t k = 0; k < spec_.n_output; ++k) {
    const double *row = output_weights_.data() + k * ocols;
    double sum = row[ocols - 1];
    for (size_t j = 0; j < spec_.n_hidden; ++j) sum += row[j] * hidden[j];
    output[k] = Sigmoid(sum);
  }
}

Network::Activation Network::Forward(std::span<const double> input,
                                     std::span<const double> context) const {
  if (input.size() != spec_.n_input) {
    throw DimensionError("network '" + name_ + "' expects " +
                         std::to_string(spec_.n_input) + " inputs, got " +
                         std::to_string(input.size()));
  }
  if (spec_.recurrent && context.size() != spec_.n_hidden) {
    throw DimensionError("network '" + name_ + "' expects a context of " +
                         std::to_string(spec_.n_hidden) + ", got " +
                         std::to_string(context.size()));
  }
  Activation activation;
  activation.hidden.resize(spec_.n_hidden);
  activation.output.resize(spec_.n_output);
  Forward(input, context, activation.hidden, activation.output);
  return activation;
}

Network InitNetwork(const NetworkSpec &spec, uint64_t seed, std::string name) {
  Network network(spec, std::move(name));
  Rng rng(seed);
  for (double &w : network.hidden_weights()) w = rng.Uniform(-0.1, 0.1);
  for (double &w : network.output_weights()) w = rng.Uniform(-0.1, 0.1);
  return network;
}

size_t SequenceDataset::PatternCount() const {
  size_t count = 0;
  for (const auto &sequence : sequences) count += sequence.size();
  return count;
}

void SequenceDataset::CheckCompatible(const NetworkSpec &spec) const {
  for (size_t s = 0; s < sequences.size(); ++s) {
    for (size_t p = 0; p < sequences[s].size(); ++p) {
      const Pattern &pattern = sequences[s][p];
      if (pattern.input.size() != spec.n_input ||
          pattern.target.size() != spec.n_output) {
        throw DimensionError(
            "pattern " + std::to_string(p) + " of sequence " +
            std::to_string(s) + " has shape " +
            std::to_string(pattern.input.size()) + "->" +
            std::to_string(pattern.target.size()) + ", network expects " +
            std::to_string(spec.n_input) + "->" +
            std::to_string(spec.n_output));
      }
    }
  }
}

void TrainingConfig::Validate() const {
  if (epochs < 1) throw Error("training needs at least one epoch");
  if (!(learning_rate > 0.0)) throw Error("learning rate must be positive");
  if (hidden_units < 1) throw Error("hidden_units must be positive");
}

TrainingResult Train(Network network, const SequenceDataset &dataset,
                     const TrainingConfig &config) {
  config.Validate();
  if (dataset.empty()) throw Error("empty training dataset");
  const NetworkSpec &spec = network.spec();
  dataset.CheckCompatible(spec);

  const size_t n_in = spec.n_input;
  const size_t n_hid = spec.n_hidden;
  const size_t n_out = spec.n_output;
  const size_t n_ctx = spec.context_size();
  const size_t hcols = spec.hidden_columns();
  const size_t ocols = spec.output_columns();
  const double rate = config.learning_rate;

  std::vector<double> context(n_ctx), hidden(n_hid), output(n_out);
  std::vector<double> delta_out(n_out), delta_hid(n_hid);
  double *wh = network.hidden_weights().data();
  double *wo = network.output_weights().data();

  TrainingResult result;
  result.loss_history.reserve(static_cast<size_t>(config.epochs));
  const double normalizer =
      static_cast<double>(dataset.PatternCount() * n_out);

  std::vector<size_t> order(dataset.sequences.size());
  std::iota(order.begin(), order.end(), 0);
  Rng shuffler(config.seed ^ 0x5eedULL);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double sse = 0.0;
    if (config.shuffle) {
      for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[shuffler.Below(i)]);
    }
    for (size_t index : order) {
      const Sequence &sequence = dataset.sequences[index];
      std::fill(context.begin(), context.end(), 0.0);
      for (const Pattern &pattern : sequence) {
        network.Forward(pattern.input, context, hidden, output);
        for (size_t k = 0; k < n_out; ++k) {
          const double err = pattern.target[k] - output[k];
          sse += err * err;
          delta_out[k] = err * output[k] * (1.0 - output[k]);
        }
        for (size_t j = 0; j < n_hid; ++j) {
          double back = 0.0;
          for (size_t k = 0; k < n_out; ++k) back += delta_out[k] * wo[k * ocols + j];
          delta_hid[j] = back * hidden[j] * (1.0 - hidden[j]);
        }
        for (size_t k = 0; k < n_out; ++k) {
          double *row = wo + k * ocols;
          const double step = rate * delta_out[k];
          for (size_t j = 0; j < n_hid; ++j) row[j] += step * hidden[j];
          row[ocols - 1] += step;
        }
        for (size_t j = 0; j < n_hid; ++j) {
          double *row = wh + j * hcols;
          const double step = rate * delta_hid[j];
          if (step == 0.0) continue;
          for (size_t i = 0; i < n_in; ++i) row[i] += step * pattern.input[i];
          for (size_t c = 0; c < n_ctx; ++c) row[n_in + c] += step * context[c];
          row[hcols - 1] += step;
        }
        if (n_ctx) std::copy(hidden.begin(), hidden.end(), context.begin());
      }
    }
    result.loss_history.push_back(sse / normalizer);
  }
  result.network = std::move(network);
  return result;
}

TrainingResult TrainNew(size_t n_input, size_t n_output, bool recurrent,
                        const SequenceDataset &dataset,
                        const TrainingConfig &config, std::string name) {
  config.Validate();
  NetworkSpec spec{n_input, config.hidden_units, n_output, recurrent};
  return Train(InitNetwork(spec, config.seed, std::move(name)), dataset,
               config);
}

namespace {

void CheckSample(const Network &network, const GradientSample &sample) {
  const NetworkSpec &spec = network.spec();
  if (sample.input.size() != spec.n_input ||
      sample.target.size() != spec.n_output ||
      (spec.recurrent && sample.context.size() != spec.n_hidden)) {
    throw DimensionError("gradient sample does not match network shape");
  }
}

}  // namespace

double SquaredError(const Network &network, const GradientSample &sample) {
  CheckSample(network, sample);
  auto activation = network.Forward(sample.input, sample.context);
  double error = 0.0;
  for (size_t k = 0; k < activation.output.size(); ++k) {
    const double diff = sample.target[k] - activation.output[k];
    error += diff * diff;
  }
  return 0.5 * error;
}

Gradient ComputeGradient(const Network &network, const GradientSample &sample) {
  CheckSample(network, sample);
  const NetworkSpec &spec = network.spec();
  const size_t n_in = spec.n_input;
  const size_t n_ctx = spec.context_size();
  const size_t hcols = spec.hidden_columns();
  const size_t ocols = spec.output_columns();
  auto activation = network.Forward(sample.input, sample.context);
  const auto &hidden = activation.hidden;
  const auto &output = activation.output;
  auto wo = network.output_weights();

  Gradient gradient;
  gradient.hidden.assign(spec.n_hidden * hcols, 0.0);
  gradient.output.assign(spec.n_output * ocols, 0.0);
  std::vector<double> delta_out(spec.n_output);
  for (size_t k = 0; k < spec.n_output; ++k) {
    // dE/dnet_k for E = 1/2 (t - o)^2.
    delta_out[k] = -(sample.target[k] - output[k]) * output[k] * (1.0 - output[k]);
    for (size_t j = 0; j < spec.n_hidden; ++j) {
      gradient.output[k * ocols + j] = delta_out[k] * hidden[j];
    }
    gradient.output[k * ocols + ocols - 1] = delta_out[k];
  }
  for (size_t j = 0; j < spec.n_hidden; ++j) {
    double back = 0.0;
    for (size_t k = 0; k < spec.n_output; ++k) back += delta_out[k] * wo[k * ocols + j];
    const double delta = back * hidden[j] * (1.0 - hidden[j]);
    double *row = gradient.hidden.data() + j * hcols;
    for (size_t i = 0; i < n_in; ++i) row[i] = delta * sample.input[i];
    for (size_t c = 0; c < n_ctx; ++c) row[n_in + c] = delta * sample.context[c];
    row[hcols - 1] = delta;
  }
  return gradient;
}

double GradientCheck(const Network &network, const GradientSample &sample,
                     double epsilon, const GradientFn &gradient_fn) {
  if (!(epsilon >= 1e-7 && epsilon <= 1e-3)) {
    throw Error("gradient check epsilon must lie in [1e-7, 1e-3]");
  }
  Gradient analytic = gradient_fn(network, sample);
  const size_t n_hidden_weights = network.hidden_weights().size();
  if (analytic.hidden.size() != n_hidden_weights ||
      analytic.output.size() != network.output_weights().size()) {
    throw DimensionError("gradient has the wrong shape");
  }
  Network probe = network;
  double worst = 0.0;
  for (size_t w = 0; w < network.WeightCount(); ++w) {
    const double original = probe.Weight(w);
    probe.Weight(w) = original + epsilon;
    const double plus = SquaredError(probe, sample);
    probe.Weight(w) = original - epsilon;
    const double minus = SquaredError(probe, sample);
    probe.Weight(w) = original;
    const double numeric = (plus - minus) / (2.0 * epsilon);
    const double exact = w < n_hidden_weights
                             ? analytic.hidden[w]
                             : analytic.output[w - n_hidden_weights];
    const double scale = std::max(std::abs(numeric), std::abs(exact));
    if (scale < 1e-8) continue;
    worst = std::max(worst, std::abs(numeric - exact) / scale);
  }
  return worst;
}

double ArgmaxAccuracy(const Network &network, const SequenceDataset &dataset) {
  if (dataset.empty()) throw Error("empty evaluation dataset");
  dataset.CheckCompatible(network.spec());
  const NetworkSpec &spec = network.spec();
  std::vector<double> context(spec.context_size()), hidden(spec.n_hidden),
      output(spec.n_output);
  size_t correct = 0;
  for (const Sequence &sequence : dataset.sequences) {
    std::fill(context.begin(), context.end(), 0.0);
    for (const Pattern &pattern : sequence) {
      network.Forward(pattern.input, context, hidden, output);
      if (Argmax(output) == Argmax(pattern.target)) ++correct;
      if (spec.recurrent) context = hidden;
    }
  }
  return static_cast<double>(correct) /
         static_cast<double>(dataset.PatternCount());
}

std::string FormatNetwork(const Network &network) {
  const NetworkSpec &spec = network.spec();
  std::string out = "flatscreen-network " +
                    std::to_string(kNetworkFormatVersion) + "\n";
  out += "name " + (network.name().empty() ? std::string("-") : network.name()) + "\n";
  out += "spec " + std::to_string(spec.n_input) + " " +
         std::to_string(spec.n_hidden) + " " + std::to_string(spec.n_output) +
         " " + (spec.recurrent ? "recurrent" : "feedforward") + "\n";
  auto matrix = [&out](const char *tag, std::span<const double> weights,
                       size_t rows, size_t cols) {
    out += std::string(tag) + " " + std::to_string(rows) + " " +
           std::to_string(cols) + "\n";
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) {
        if (c) out += ' ';
        out += FormatDouble(weights[r * cols + c]);
      }
      out += '\n';
    }
  };
  matrix("hidden", network.hidden_weights(), spec.n_hidden,
         spec.hidden_columns());
  matrix("output", network.output_weights(), spec.n_output,
         spec.output_columns());
  out += "end\n";
  return out;
}

namespace {

class LineReader {
 public:
  LineReader(std::string_view text, const std::string &source)
      : lines_(Split(text, '\n')), source_(source) {}

  std::vector<std::string> Next(const char *what) {
    while (index_ < lines_.size()) {
      std::string_view line = lines_[index_++];
      if (!Trim(line).empty()) return SplitWhitespace(line);
    }
    throw ParseError(source_, static_cast<int>(index_),
                     std::string("unexpected end of file, expected ") + what);
  }

  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError(source_, static_cast<int>(index_), what);
  }

  size_t ReadCount(const std::string &field) {
    long long value;
    if (!ParseInt(field, &value) || value <= 0) Fail("bad count '" + field + "'");
    return static_cast<size_t>(value);
  }

 private:
  std::vector<std::string_view> lines_;
  std::string source_;
  size_t index_ = 0;
};

}  // namespace

Network ParseNetwork(std::string_view text, const std::string &source) {
  LineReader reader(text, source);
  auto header = reader.Next("header");
  if (header.size() != 2 || header[0] != "flatscreen-network") {
    reader.Fail("field 'header': not a flatscreen network file");
  }
  long long version;
  if (!ParseInt(header[1], &version)) reader.Fail("field 'version': not a number");
  if (version != kNetworkFormatVersion) {
    reader.Fail("field 'version': unsupported version " + header[1] +
                " (expected " + std::to_string(kNetworkFormatVersion) + ")");
  }
  auto name = reader.Next("name");
  if (name.size() != 2 || name[0] != "name") reader.Fail("field 'name' missing");
  auto spec_line = reader.Next("spec");
  if (spec_line.size() != 5 || spec_line[0] != "spec") {
    reader.Fail("field 'spec' malformed");
  }
  NetworkSpec spec;
  spec.n_input = reader.ReadCount(spec_line[1]);
  spec.n_hidden = reader.ReadCount(spec_line[2]);
  spec.n_output = reader.ReadCount(spec_line[3]);
  if (spec_line[4] == "recurrent") {
    spec.recurrent = true;
  } else if (spec_line[4] != "feedforward") {
    reader.Fail("field 'spec': unknown kind '" + spec_line[4] + "'");
  }
  Network network(spec, name[1] == "-" ? "" : name[1]);

  auto read_matrix = [&](const char *tag, std::span<double> weights,
                         size_t rows, size_t cols) {
    auto head = reader.Next(tag);
    if (head.size() != 3 || head[0] != tag || reader.ReadCount(head[1]) != rows ||
        reader.ReadCount(head[2]) != cols) {
      reader.Fail(std::string("field '") + tag + "': bad matrix header");
    }
    for (size_t r = 0; r < rows; ++r) {
      auto values = reader.Next(tag);
      if (values.size() != cols) {
        reader.Fail(std::string("field '") + tag + "': row " +
                    std::to_string(r) + " has " +
                    std::to_string(values.size()) + " values, expected " +
                    std::to_string(cols));
      }
      for (size_t c = 0; c < cols; ++c) {
        double v;
        if (!ParseDouble(values[c], &v) || !std::isfinite(v)) {
          reader.Fail(std::string("field '") + tag + "': bad weight '" +
                      values[c] + "'");
        }
        weights[r * cols + c] = v;
      }
    }
  };
  read_matrix("hidden", network.hidden_weights(), spec.n_hidden,
              spec.hidden_columns());
  read_matrix("output", network.output_weights(), spec.n_output,
              spec.output_columns());
  auto end = reader.Next("end");
  if (end.size() != 1 || end[0] != "end") reader.Fail("field 'end' missing");
  return network;
}

void SaveNetwork(const Network &network, const std::filesystem::path &path) {
  WriteFile(path, FormatNetwork(network));
}

Network LoadNetwork(const std::filesystem::path &path) {
  return ParseNetwork(ReadFile(path), path.string());
}

}  // namespace flatscreen
