// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bnc/errors.hpp"

namespace bnc {

/// Where an instance node came from. Reduction-built instances tag clause
/// nodes as auxiliary; only original nodes correspond to pinnable genes.
struct Provenance {
  enum class Kind : uint8_t { original, auxiliary };
  Kind kind = Kind::original;
  int owner = -1;   // original/gene index
  int clause = -1;  // clause index for auxiliaries, -1 otherwise
  bool operator==(const Provenance&) const = default;

  static Provenance original(int node) { return {Kind::original, node, -1}; }
  static Provenance auxiliary(int owner, int clause) {
    return {Kind::auxiliary, owner, clause};
  }
};

/// Threshold-cascade instance. Parallel in-edges are stored repeated and
/// count toward activation with their multiplicity.
struct TssInstance {
  int m = 0;
  std::vector<std::vector<int>> in_edges;  // sorted, parallel edges repeated
  std::vector<int> tau;
  std::vector<Provenance> provenance;

  static TssInstance plain(std::vector<std::vector<int>> in_edges, std::vector<int> tau);

  void validate() const;
  int in_degree(int v) const { return static_cast<int>(in_edges[v].size()); }
  std::vector<std::vector<int>> out_edges() const;
  std::vector<int> original_nodes() const;

  bool operator==(const TssInstance&) const = default;
};

/// Monotone activation trace X[0] ⊆ X[1] ⊆ … ⊆ X*. Layers are cumulative,
/// sorted, strictly growing; the last layer is the fixpoint.
struct CascadeTrace {
  std::vector<std::vector<int>> layers;
  const std::vector<int>& fixpoint() const { return layers.back(); }
  int rounds() const { return static_cast<int>(layers.size()) - 1; }
};

/// Which nodes a seed must activate to count as a solution. Reductions that
/// add auxiliary clause nodes are judged on original coverage; plain
/// instances use all nodes (the two coincide when nothing is auxiliary).
enum class Coverage { all_nodes, originals };

CascadeTrace cascade(const TssInstance& inst, const std::vector<int>& seed);

bool covers(const TssInstance& inst, const std::vector<int>& active, Coverage coverage);

bool is_target_set(const TssInstance& inst, const std::vector<int>& seed,
                   Coverage coverage = Coverage::all_nodes);

struct TargetSet {
  std::vector<int> members;  // sorted
  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const TargetSet&) const = default;
};

/// Nodes whose threshold exceeds their in-degree. They can never be
/// activated by the cascade, so every solution covering them must seed them.
std::vector<int> mandatory_seeds(const TssInstance& inst);

struct ExactOptions {
  int candidate_budget = 25;
  bool restrict_to_original = true;
  Coverage coverage = Coverage::all_nodes;
};

/// Minimum-cardinality target set over the candidate nodes, found by
/// exhausting all smaller cardinalities. Ties break to the lexicographically
/// smallest member list.
TargetSet solve_exact(const TssInstance& inst, const ExactOptions& opts = {});

struct GreedyOptions {
  bool restrict_to_original = true;
  Coverage coverage = Coverage::all_nodes;
};

/// Adds the candidate with the largest resulting fixpoint until the goal is
/// covered, then prunes redundant members in reverse insertion order.
TargetSet solve_greedy(const TssInstance& inst, const GreedyOptions& opts = {});

/// Full trace of a valid seed, usable as a machine-checkable certificate.
CascadeTrace minimal_certificate(const TssInstance& inst, const std::vector<int>& seed,
                                 Coverage coverage = Coverage::all_nodes);

/// Emits the instance as an integer linear program in LP text format:
/// binaries s_i and e_ij, per-node activation rows over out-edges, pairwise
/// ordering equalities, and all ordered triangle rows. No solver is invoked.
void export_ilp(const TssInstance& inst, std::ostream& sink);
std::string export_ilp_string(const TssInstance& inst);

}  // namespace bnc
