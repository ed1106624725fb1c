// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "bnc/reduction.hpp"
#include "bnc/tss.hpp"

namespace bnc {

/// Disjoint blocks that each induce a complete subgraph, with a tree-shaped
/// contraction.
struct CliquePartition {
  std::vector<std::vector<int>> blocks;
};

/// Shape of a generated hierarchical network: (k+1)^depth nodes laid out
/// recursively, hub first.
struct HierarchySpec {
  int k = 0;
  int depth = 0;
  int hub = 0;
};

/// Exact minimum seed for a signed-clique instance: sorts each sign/value
/// class by threshold and scans all prefix-count tuples, at most n^4 of
/// them.
TargetSet solve_clique(const TssInstance& inst, const SignedThresholdNet& classes);

/// Exact minimum seed for a block-cactus instance by leaf elimination:
/// solve the leaf clique, relax the unique cross-edge endpoint by one, and
/// recurse on the remainder.
TargetSet solve_block_cactus(const TssInstance& inst, const CliquePartition& partition,
                             const SignedThresholdNet& classes);

struct CactusifyResult {
  TssInstance instance;
  CliquePartition partition;
  std::vector<std::pair<int, int>> removed_arcs;  // cross-cluster edges dropped
};

/// Conservative preprocessing onto block-cactus form: completes each cluster
/// into a full clique (raising the receiving threshold per added edge) and
/// drops cross-cluster arcs until the contraction is a forest. Any seed of
/// the result is a seed of the original instance.
CactusifyResult cactusify(const TssInstance& inst, const std::vector<std::vector<int>>& clusters);

/// Classes treating every node as excitatory and on; suitable for
/// cactusified instances, whose blocks are plain full cliques.
SignedThresholdNet uniform_classes(int m);

/// Recursive hierarchical solver: each sub-copy is solved with and without
/// the hub's help, copies that need the hub commit the helped solution, and
/// the hub is seeded when the committed sets do not already activate it.
TargetSet solve_hierarchical(const TssInstance& inst, const HierarchySpec& spec,
                             const SignedThresholdNet& classes);

/// Solver for unanimous-threshold instances (threshold = in-degree): seeds a
/// feedback vertex set of every strongly connected component plus all nodes
/// that can never fire.
TargetSet solve_unanimous_fvs(const TssInstance& inst);

/// Prior-art comparator on the original graph: a heuristic feedback vertex
/// set plus one node per otherwise untouched weakly connected component.
TargetSet solve_cycle_baseline(const RegulatoryNetwork& net);

/// The two structural conditions for unanimous-threshold instances: every
/// cycle meets S, and every node is reachable from S together with the
/// self-firing roots (threshold <= 0).
bool prop_conditions_unanimous(const TssInstance& inst, const std::vector<int>& S);

/// Greedy directed feedback vertex set: repeatedly remove the highest-degree
/// node lying on a cycle, then drop redundant picks in reverse order.
/// Guarantees validity, not any approximation ratio.
std::vector<int> greedy_feedback_vertex_set(int n, const std::vector<std::vector<int>>& in_edges);

}  // namespace bnc
