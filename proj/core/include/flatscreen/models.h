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

// The set of named networks used by the analysis pipeline.

#ifndef FLATSCREEN_MODELS_H_
#define FLATSCREEN_MODELS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "flatscreen/network.h"

namespace flatscreen {

enum class NetId {
  kBasSynDis,
  kBasSemDis,
  kAbsSynCat,
  kAbsSemCat,
  kPhraseStart,
  kBasSynPre,
  kBasSemPre,
  kBasSynEq,
  kBasSemEq,
  kAbsSynEq,
  kAbsSemEq,
  kWordError,
  kPhraseError,
};

inline constexpr size_t kNetCount = 13;

inline constexpr std::array<NetId, kNetCount> kAllNets = {
    NetId::kBasSynDis, NetId::kBasSemDis,  NetId::kAbsSynCat,
    NetId::kAbsSemCat, NetId::kPhraseStart, NetId::kBasSynPre,
    NetId::kBasSemPre, NetId::kBasSynEq,   NetId::kBasSemEq,
    NetId::kAbsSynEq,  NetId::kAbsSemEq,   NetId::kWordError,
    NetId::kPhraseError};

// "BAS-SYN-DIS", "WORD-ERROR", ...
std::string_view NetName(NetId id);
std::optional<NetId> NetFromName(std::string_view name);

// Hidden size of the two repair-decision networks; the others use the
// configured hidden size.
inline constexpr size_t kErrorNetHidden = 4;

NetworkSpec NetSpec(NetId id, size_t hidden_units = 14);

class Models {
 public:
  // Zero-weight networks of the default specs.
  Models();

  // Every network initialized from its own seed derived from `seed`.
  static Models Initialized(uint64_t seed, size_t hidden_units = 14);

  const Network &net(NetId id) const { return nets_[static_cast<size_t>(id)]; }

  // Throws DimensionError if the input/output sizes or recurrence differ
  // from NetSpec(id).
  void Set(NetId id, Network network);

  // One "<NAME>.net" file per network.
  void Save(const std::filesystem::path &directory) const;
  static Models Load(const std::filesystem::path &directory);

  bool operator==(const Models &) const = default;

 private:
  std::array<Network, kNetCount> nets_;
};

// Seed for one network's initialization, derived from a base seed.
uint64_t NetSeed(uint64_t base_seed, NetId id);

}  // namespace flatscreen

#endif  // FLATSCREEN_MODELS_H_
