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

#include <string>

#include "flatscreen/category.h"
#include "flatscreen/error.h"

namespace flatscreen {

std::string_view NetName(NetId id) {
  switch (id) {
    case NetId::kBasSynDis: return "BAS-SYN-DIS";
    case NetId::kBasSemDis: return "BAS-SEM-DIS";
    case NetId::kAbsSynCat: return "ABS-SYN-CAT";
    case NetId::kAbsSemCat: return "ABS-SEM-CAT";
    case NetId::kPhraseStart: return "PHRASE-START";
    case NetId::kBasSynPre: return "BAS-SYN-PRE";
    case NetId::kBasSemPre: return "BAS-SEM-PRE";
    case NetId::kBasSynEq: return "BAS-SYN-EQ";
    case NetId::kBasSemEq: return "BAS-SEM-EQ";
    case NetId::kAbsSynEq: return "ABS-SYN-EQ";
    case NetId::kAbsSemEq: return "ABS-SEM-EQ";
    case NetId::kWordError: return "WORD-ERROR";
    case NetId::kPhraseError: return "PHRASE-ERROR";
  }
  return "?";
}

std::optional<NetId> NetFromName(std::string_view name) {
  for (NetId id : kAllNets) {
    if (NetName(id) == name) return id;
  }
  return std::nullopt;
}

NetworkSpec NetSpec(NetId id, size_t hidden_units) {
  const size_t bsyn = AxisSize(Axis::kBasicSyn);
  const size_t bsem = AxisSize(Axis::kBasicSem);
  const size_t asyn = AxisSize(Axis::kAbsSyn);
  const size_t asem = AxisSize(Axis::kAbsSem);
  switch (id) {
    case NetId::kBasSynDis: return {bsyn, hidden_units, bsyn, true};
    case NetId::kBasSemDis: return {bsem, hidden_units, bsem, true};
    case NetId::kAbsSynCat: return {bsyn, hidden_units, asyn, true};
    case NetId::kAbsSemCat: return {bsem, hidden_units, asem, true};
    case NetId::kPhraseStart: return {bsyn, hidden_units, 2, true};
    case NetId::kBasSynPre: return {bsyn, hidden_units, bsyn, true};
    case NetId::kBasSemPre: return {bsem, hidden_units, bsem, true};
    case NetId::kBasSynEq: return {2 * bsyn, hidden_units, 2, false};
    case NetId::kBasSemEq: return {2 * bsem, hidden_units, 2, false};
    case NetId::kAbsSynEq: return {2 * asyn, hidden_units, 2, false};
    case NetId::kAbsSemEq: return {2 * asem, hidden_units, 2, false};
    case NetId::kWordError: return {3, kErrorNetHidden, 2, false};
    case NetId::kPhraseError: return {3, kErrorNetHidden, 2, false};
  }
  throw Error("unknown network id");
}

uint64_t NetSeed(uint64_t base_seed, NetId id) {
  // SplitMix64 finalizer over (seed, id) keeps per-network streams apart.
  uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(id) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Models::Models() {
  for (NetId id : kAllNets) {
    nets_[static_cast<size_t>(id)] = Network(NetSpec(id), std::string(NetName(id)));
  }
}

Models Models::Initialized(uint64_t seed, size_t hidden_units) {
  Models models;
  for (NetId id : kAllNets) {
    models.nets_[static_cast<size_t>(id)] = InitNetwork(
        NetSpec(id, hidden_units), NetSeed(seed, id), std::string(NetName(id)));
  }
  return models;
}

void Models::Set(NetId id, Network network) {
  const NetworkSpec want = NetSpec(id);
  const NetworkSpec &got = network.spec();
  if (got.n_input != want.n_input || got.n_output != want.n_output ||
      got.recurrent != want.recurrent) {
    throw DimensionError("network for " + std::string(NetName(id)) +
                         " has the wrong input/output shape");
  }
  network.set_name(std::string(NetName(id)));
  nets_[static_cast<size_t>(id)] = std::move(network);
}

void Models::Save(const std::filesystem::path &directory) const {
  std::filesystem::create_directories(directory);
  for (NetId id : kAllNets) {
    SaveNetwork(net(id), directory / (std::string(NetName(id)) + ".net"));
  }
}

Models Models::Load(const std::filesystem::path &directory) {
  Models models;
  for (NetId id : kAllNets) {
    models.Set(id, LoadNetwork(directory / (std::string(NetName(id)) + ".net")));
  }
  return models;
}

}  // namespace flatscreen
