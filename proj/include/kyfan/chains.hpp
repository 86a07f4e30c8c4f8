#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kyfan/grid.hpp"
#include "kyfan/report.hpp"
#include "kyfan/verify.hpp"

namespace kyfan {

/// Ordered means whose adjacent pairs are checked under one relation.
struct ChainSpec {
  std::vector<std::string> mean_ids;
  Relation relation = Relation::Ratio;
  GridSpec grid = default_kyfan_grid();
};

/// One report per adjacent pair; empty for chains of fewer than two means.
/// Throws RegistryError for unknown ids.
std::vector<CheckReport> verify_chain(const ChainSpec& chain, const CheckOptions& opts = {});

/// A named preset: one or more linear chains (the lower harmonic chain has
/// two incomparable middle members and runs as two chains).
struct ChainPreset {
  std::string name;
  std::string description;
  std::vector<ChainSpec> chains;
};

const std::vector<ChainPreset>& chain_presets();
const ChainPreset& find_chain_preset(std::string_view name);

/// A claimed inequality between two means, N on the larger side.
struct PairClaim {
  std::string lower;  // M
  std::string upper;  // N
  Relation relation = Relation::Ratio;
  bool expected = true;  // false for deliberately reversed pairs
};

/// Every pair claimed by the presets and worked examples, plus the reversed
/// pairs used as negative controls.
const std::vector<PairClaim>& preset_pairs();

}  // namespace kyfan
