// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnc/network.hpp"
#include "bnc/solvers.hpp"

namespace bnc {

/// Random-network recipe. All families produce unit-weight signed threshold
/// rules; the node signs are drawn once per node so every node is purely
/// excitatory or purely inhibitory.
struct GenSpec {
  enum class Family { erdos_renyi, scale_free, hierarchical, block_cactus };
  Family family = Family::erdos_renyi;
  int n = 0;
  uint64_t seed = 0;
  double sign_prob = 0.5;  // probability a node is excitatory

  double er_p = 0.3;                // directed edge probability
  int sf_m = 2;                     // edges attached per new node
  bool sf_old_to_new = false;       // orient attachment edges old -> new
                                    // (existing regulators feed new genes);
                                    // otherwise each direction is drawn
  int hier_k = 2, hier_depth = 2;   // n must equal (k+1)^depth
  std::vector<int> cactus_blocks;   // block sizes, summing to n

  double tau_value = 0.0;           // constant threshold
  std::vector<double> tau_per_node; // overrides tau_value when non-empty

  std::string family_name() const;
  double param() const;
};

RegulatoryNetwork generate(const GenSpec& spec);

/// Lexicographically smallest fixed point of a threshold network.
State pick_attractor(const RegulatoryNetwork& net);

/// Structure metadata for routing generated networks to structured solvers.
std::optional<HierarchySpec> hierarchy_of(const GenSpec& spec);
std::optional<CliquePartition> partition_of(const GenSpec& spec);

}  // namespace bnc
