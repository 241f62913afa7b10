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

#include "flatscreen/models.h"

#include <set>

#include <gtest/gtest.h>

#include "flatscreen/error.h"
#include "test_util.h"

namespace flatscreen {
namespace {

TEST(NetSpec, ShapesOfEveryNetwork) {
  EXPECT_EQ(NetSpec(NetId::kBasSynDis), (NetworkSpec{13, 14, 13, true}));
  EXPECT_EQ(NetSpec(NetId::kBasSemDis), (NetworkSpec{20, 14, 20, true}));
  EXPECT_EQ(NetSpec(NetId::kAbsSynCat), (NetworkSpec{13, 14, 8, true}));
  EXPECT_EQ(NetSpec(NetId::kAbsSemCat), (NetworkSpec{20, 14, 17, true}));
  EXPECT_EQ(NetSpec(NetId::kPhraseStart), (NetworkSpec{13, 14, 2, true}));
  EXPECT_EQ(NetSpec(NetId::kBasSynPre), (NetworkSpec{13, 14, 13, true}));
  EXPECT_EQ(NetSpec(NetId::kBasSemPre), (NetworkSpec{20, 14, 20, true}));
  EXPECT_EQ(NetSpec(NetId::kBasSynEq), (NetworkSpec{26, 14, 2, false}));
  EXPECT_EQ(NetSpec(NetId::kBasSemEq), (NetworkSpec{40, 14, 2, false}));
  EXPECT_EQ(NetSpec(NetId::kAbsSynEq), (NetworkSpec{16, 14, 2, false}));
  EXPECT_EQ(NetSpec(NetId::kAbsSemEq), (NetworkSpec{34, 14, 2, false}));
  EXPECT_EQ(NetSpec(NetId::kWordError), (NetworkSpec{3, 4, 2, false}));
  EXPECT_EQ(NetSpec(NetId::kPhraseError, 28), (NetworkSpec{3, 4, 2, false}));
  EXPECT_EQ(NetSpec(NetId::kBasSynPre, 7).n_hidden, 7u);
}

TEST(NetNames, RoundTripAndDistinct) {
  std::set<std::string_view> names;
  for (NetId id : kAllNets) {
    EXPECT_EQ(NetFromName(NetName(id)), id);
    names.insert(NetName(id));
  }
  EXPECT_EQ(names.size(), kNetCount);
  EXPECT_FALSE(NetFromName("PAUSE-ERROR").has_value());
}

TEST(NetSeed, DistinctPerNetwork) {
  std::set<uint64_t> seeds;
  for (NetId id : kAllNets) seeds.insert(NetSeed(1, id));
  EXPECT_EQ(seeds.size(), kNetCount);
  EXPECT_NE(NetSeed(1, NetId::kBasSynDis), NetSeed(2, NetId::kBasSynDis));
}

TEST(Models, SetRejectsWrongShape) {
  Models models;
  EXPECT_THROW(models.Set(NetId::kBasSynDis, Network(NetworkSpec{13, 14, 8, true})),
               DimensionError);
  EXPECT_THROW(models.Set(NetId::kBasSynDis, Network(NetworkSpec{13, 14, 13, false})),
               DimensionError);
  EXPECT_NO_THROW(models.Set(NetId::kBasSynDis, Network(NetworkSpec{13, 7, 13, true})));
}

TEST(Models, SaveLoadRoundTrip) {
  testing::TempDir dir;
  const Models models = Models::Initialized(5);
  models.Save(dir.path());
  for (NetId id : kAllNets) {
    EXPECT_TRUE(std::filesystem::exists(dir.path() / (std::string(NetName(id)) + ".net")));
  }
  EXPECT_EQ(Models::Load(dir.path()), models);
  EXPECT_THROW(Models::Load(dir.path() / "missing"), Error);
}

}  // namespace
}  // namespace flatscreen
