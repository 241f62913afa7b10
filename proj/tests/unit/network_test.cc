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

#include <cmath>

#include <gtest/gtest.h>

#include "flatscreen/error.h"
#include "flatscreen/models.h"
#include "flatscreen/random.h"
#include "test_util.h"

namespace flatscreen {
namespace {

double Logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<double> RandomVector(Rng &rng, size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double &x : v) x = rng.Uniform(lo, hi);
  return v;
}

TEST(InitNetwork, DeterministicPerSeed) {
  const NetworkSpec spec{13, 14, 8, true};
  EXPECT_EQ(InitNetwork(spec, 9), InitNetwork(spec, 9));
  EXPECT_NE(InitNetwork(spec, 9), InitNetwork(spec, 10));
}

TEST(InitNetwork, WeightsInSmallSymmetricRange) {
  const Network net = InitNetwork({20, 14, 17, true}, 3);
  for (size_t i = 0; i < net.WeightCount(); ++i) {
    EXPECT_GE(net.Weight(i), -0.1);
    EXPECT_LE(net.Weight(i), 0.1);
  }
}

TEST(NetworkSpec, WeightCountIncludesBiases) {
  // (13 inputs + 14 context + bias) * 14 + (14 + bias) * 8
  EXPECT_EQ((NetworkSpec{13, 14, 8, true}.WeightCount()), 512u);
  EXPECT_EQ((NetworkSpec{3, 4, 2, false}.WeightCount()), 26u);
}

TEST(NetworkSpec, ZeroHiddenIsRejected) {
  EXPECT_THROW(InitNetwork({13, 0, 8, true}, 1), Error);
  EXPECT_THROW(Network(NetworkSpec{0, 3, 2, false}), Error);
}

TEST(Forward, ZeroWeightsGiveOneHalf) {
  const Network net(NetworkSpec{5, 4, 3, true});
  const std::vector<double> input = {1, 0, 2, 0, -1};
  const auto out = net.Forward(input, net.InitialContext()).output;
  for (double o : out) EXPECT_DOUBLE_EQ(o, 0.5);
}

TEST(Forward, MatchesHandComputation) {
  Network net(NetworkSpec{2, 2, 1, false});
  const std::vector<double> hidden = {0.5, -0.5, 0.1, 1.0, 1.0, -1.0};
  const std::vector<double> output = {2.0, -1.0, 0.5};
  std::copy(hidden.begin(), hidden.end(), net.hidden_weights().begin());
  std::copy(output.begin(), output.end(), net.output_weights().begin());
  const std::vector<double> x = {1.0, 0.0};
  const double h0 = Logistic(0.5 * 1.0 - 0.5 * 0.0 + 0.1);
  const double h1 = Logistic(1.0 * 1.0 + 1.0 * 0.0 - 1.0);
  const double expected = Logistic(2.0 * h0 - 1.0 * h1 + 0.5);
  const auto a = net.Forward(x, {});
  EXPECT_NEAR(a.hidden[0], h0, 1e-15);
  EXPECT_NEAR(a.hidden[1], h1, 1e-15);
  EXPECT_NEAR(a.output[0], expected, 1e-15);
}

TEST(Forward, FeedforwardIgnoresContext) {
  const Network net = InitNetwork({4, 3, 2, false}, 5);
  const std::vector<double> x = {1, 0, 0, 1};
  const std::vector<double> c1 = {0.1, 0.2, 0.3};
  const std::vector<double> c2 = {0.9, 0.8, 0.7};
  EXPECT_EQ(net.Forward(x, c1).output, net.Forward(x, c2).output);
  EXPECT_EQ(net.Forward(x, c1).output, net.Forward(x, {}).output);
}

TEST(Forward, RecurrentReadsContext) {
  const Network net = InitNetwork({4, 3, 2, true}, 5);
  const std::vector<double> x = {1, 0, 0, 1};
  EXPECT_NE(net.Forward(x, std::vector<double>{0.1, 0.2, 0.3}).output,
            net.Forward(x, std::vector<double>{0.9, 0.8, 0.7}).output);
  EXPECT_THROW(net.Forward(x, std::vector<double>{0.1}), DimensionError);
}

TEST(Forward, OutputsStrictlyInsideUnitInterval) {
  Rng rng(11);
  Network net = InitNetwork({6, 5, 4, true}, 2);
  for (size_t i = 0; i < net.WeightCount(); ++i) net.Weight(i) *= 5000.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto out = net.Forward(RandomVector(rng, 6, -10, 10), RandomVector(rng, 5, 0, 1));
    for (double o : out.output) {
      EXPECT_GT(o, 0.0);
      EXPECT_LT(o, 1.0);
    }
  }
}

TEST(CombineTwoUnitOutput, Examples) {
  EXPECT_DOUBLE_EQ(CombineTwoUnitOutput(1.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(CombineTwoUnitOutput(0.0, 1.0), 0.0);
  EXPECT_NEAR(CombineTwoUnitOutput(0.8, 0.3), 0.56, 1e-15);
  EXPECT_THROW(CombineTwoUnitOutput(1.2, 0.0), Error);
}

SequenceDataset XorDataset() {
  SequenceDataset data;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      data.sequences.push_back({{{double(a), double(b)}, {double(a ^ b)}}});
    }
  }
  return data;
}

TEST(Train, LearnsXor) {
  const TrainingConfig config{5000, 0.5, 4, 3};
  const auto result = TrainNew(2, 1, false, XorDataset(), config);
  for (const auto &sequence : XorDataset().sequences) {
    const auto &p = sequence.front();
    EXPECT_NEAR(result.network.Forward(p.input, {}).output[0], p.target[0], 0.2)
        << p.input[0] << " xor " << p.input[1];
  }
}

TEST(Train, SinglePatternDescends) {
  SequenceDataset data;
  data.sequences.push_back({{{1.0, 0.0, 1.0}, {1.0, 0.0}}});
  const auto result = TrainNew(3, 2, false, data, {50, 0.1, 4, 1});
  ASSERT_EQ(result.loss_history.size(), 50u);
  EXPECT_LT(result.loss_history.back(), result.loss_history.front());
  for (size_t e = 1; e < result.loss_history.size(); ++e) {
    EXPECT_LE(result.loss_history[e], result.loss_history[e - 1]);
  }
}

TEST(Train, Deterministic) {
  const TrainingConfig config{200, 0.3, 3, 8};
  EXPECT_EQ(TrainNew(2, 1, false, XorDataset(), config).network,
            TrainNew(2, 1, false, XorDataset(), config).network);
  TrainingConfig shuffled = config;
  shuffled.shuffle = true;
  EXPECT_EQ(TrainNew(2, 1, false, XorDataset(), shuffled).network,
            TrainNew(2, 1, false, XorDataset(), shuffled).network);
}

TEST(Train, RejectsBadInput) {
  EXPECT_THROW(TrainNew(2, 1, false, SequenceDataset{}, {10, 0.1, 2, 1}), Error);
  EXPECT_THROW(TrainNew(2, 1, false, XorDataset(), {0, 0.1, 2, 1}), Error);
  EXPECT_THROW(TrainNew(3, 1, false, XorDataset(), {10, 0.1, 2, 1}), DimensionError);
}

// Two sequences share the ambiguous second input; only the first input
// tells the targets apart.
SequenceDataset ContextFixture() {
  SequenceDataset data;
  data.sequences.push_back({{{1, 0, 0}, {1, 0}}, {{0, 0, 1}, {1, 0}}});
  data.sequences.push_back({{{0, 1, 0}, {0, 1}}, {{0, 0, 1}, {0, 1}}});
  return data;
}

TEST(Train, RecurrentNetUsesContext) {
  const auto result = TrainNew(3, 2, true, ContextFixture(), {2000, 0.5, 4, 1});
  EXPECT_DOUBLE_EQ(ArgmaxAccuracy(result.network, ContextFixture()), 1.0);
}

TEST(Train, FeedforwardNetCannotExceedHalfOnAmbiguousStep) {
  const auto result = TrainNew(3, 2, false, ContextFixture(), {2000, 0.5, 4, 1});
  // The shared input maps to one output, so one of its two targets is missed.
  EXPECT_LE(ArgmaxAccuracy(result.network, ContextFixture()), 0.75);
}

TEST(GradientCheck, RandomNetworksAgree) {
  Rng rng(4);
  for (const NetworkSpec &spec :
       {NetworkSpec{2, 3, 2, false}, NetworkSpec{13, 14, 8, true}, NetworkSpec{3, 4, 2, false}}) {
    const Network net = InitNetwork(spec, 17);
    GradientSample sample{RandomVector(rng, spec.n_input, 0, 1),
                          RandomVector(rng, spec.context_size(), 0, 1),
                          RandomVector(rng, spec.n_output, 0, 1)};
    EXPECT_LT(GradientCheck(net, sample, 1e-5), 1e-4);
  }
}

TEST(GradientCheck, SaturatedOutputsCountAsAgreeing) {
  Network net(NetworkSpec{2, 2, 2, false});
  auto out = net.output_weights();
  out[2] = 80.0;
  out[5] = 80.0;
  GradientSample sample{{1.0, 0.0}, {}, {}};
  sample.target = net.Forward(sample.input, {}).output;
  const Gradient g = ComputeGradient(net, sample);
  for (double v : g.output) EXPECT_LT(std::abs(v), 1e-8);
  EXPECT_EQ(GradientCheck(net, sample, 1e-5), 0.0);
}

TEST(GradientCheck, DetectsSignFlip) {
  const Network net = InitNetwork({4, 3, 2, true}, 2);
  GradientSample sample{{1, 0, 1, 0}, {0.2, 0.4, 0.6}, {1, 0}};
  auto flipped = [](const Network &n, const GradientSample &s) {
    Gradient g = ComputeGradient(n, s);
    for (double &v : g.hidden) v = -v;
    for (double &v : g.output) v = -v;
    return g;
  };
  EXPECT_GT(GradientCheck(net, sample, 1e-5, flipped), 0.1);
  EXPECT_THROW(GradientCheck(net, sample, 1e-1), Error);
}

TEST(ArgmaxAccuracy, PerfectMemorization) {
  const auto result = TrainNew(2, 1, false, XorDataset(), {4000, 0.5, 2, 3});
  SequenceDataset two_class;
  for (const auto &s : XorDataset().sequences) {
    const double t = s.front().target[0];
    two_class.sequences.push_back({{s.front().input, {t, 1.0 - t}}});
  }
  const auto net = TrainNew(2, 2, false, two_class, {4000, 0.5, 3, 3}).network;
  EXPECT_DOUBLE_EQ(ArgmaxAccuracy(net, two_class), 1.0);
}

TEST(NetworkFile, RoundTripIsBitwise) {
  testing::TempDir dir;
  Network net = InitNetwork({13, 14, 8, true}, 21, "ABS-SYN-CAT");
  for (size_t i = 0; i < net.WeightCount(); ++i) net.Weight(i) *= 1.0 / 3.0;
  SaveNetwork(net, dir.path() / "net.txt");
  const Network loaded = LoadNetwork(dir.path() / "net.txt");
  EXPECT_EQ(loaded, net);
  const std::vector<double> x(13, 0.25);
  EXPECT_EQ(loaded.Forward(x, loaded.InitialContext()).output,
            net.Forward(x, net.InitialContext()).output);
}

TEST(NetworkFile, TruncatedFileFails) {
  const std::string text = FormatNetwork(InitNetwork({3, 4, 2, false}, 1));
  EXPECT_THROW(ParseNetwork(text.substr(0, text.size() / 2), "trunc"), ParseError);
  EXPECT_THROW(ParseNetwork("", "empty"), ParseError);
}

TEST(NetworkFile, VersionMismatchIsExplicit) {
  std::string text = FormatNetwork(InitNetwork({3, 4, 2, false}, 1));
  text.replace(text.find(" 1\n"), 3, " 2\n");
  try {
    ParseNetwork(text, "v2");
    FAIL() << "expected a version error";
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("version"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace flatscreen
