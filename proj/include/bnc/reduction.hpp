// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "bnc/cnf.hpp"
#include "bnc/network.hpp"
#include "bnc/tss.hpp"

namespace bnc {

/// Converts a control problem into a cascade instance via the clause graph:
/// one auxiliary node per CNF clause of every rule, with edges from literal
/// sources whose stabilized value supports the clause's role relative to the
/// desired fixed point. Instances produced here are judged on original-node
/// coverage; clause nodes whose condition cannot hold at the fixed point
/// never activate and are not part of the goal.
TssInstance build_augmented(const RegulatoryNetwork& net, const State& x_star);

/// Per-node sign classes of a unit-weight threshold network, plus the class
/// partition induced by a fixed point.
struct SignedThresholdNet {
  std::vector<uint8_t> excitatory;   // class per node; nodes without out-edges count as excitatory
  std::vector<int> e1, e0, i1, i0;   // partition by class and fixed-point value
};

/// Classifies nodes as purely excitatory or purely inhibitory. Rejects
/// non-unit weights and nodes whose out-edges mix signs.
SignedThresholdNet classify_signed(const RegulatoryNetwork& net, const State& x_star);

/// Threshold-dynamics specialization: node set unchanged, original edges
/// kept when the source's stabilized value pushes the target toward its own
/// fixed-point value, thresholds raised by the number of inhibitory
/// (respectively excitatory) in-neighbors.
TssInstance build_threshold_tss(const RegulatoryNetwork& net, const State& x_star,
                                SignedThresholdNet* out_classes = nullptr);

/// Nested-canalyzing reduction: one auxiliary per rank that can produce the
/// node's fixed-point value consistently with the fixed point, wired to the
/// earlier off-ranks and its trigger, with unanimous thresholds.
TssInstance build_nc_full(const RegulatoryNetwork& net, const State& x_star);

/// Compact nested-canalyzing reduction: edges from the ranks up to the one
/// that decides the node's value at the fixed point, unanimous thresholds,
/// no auxiliary nodes.
TssInstance build_nc_unanimous(const RegulatoryNetwork& net, const State& x_star);

/// Cyclic-attractor construction: one clause-graph copy per attractor state,
/// with literal edges crossing from each copy into the next.
TssInstance build_cyclic(const RegulatoryNetwork& net, const Attractor& attractor);

/// Replaces every rule set by a single conservative rule: a node at 1 in the
/// attractor must fire under every alternative once its support is settled,
/// a node at 0 must stay off under every alternative.
RegulatoryNetwork merge_rules(const RegulatoryNetwork& net, const State& x_star);

enum class MergeRoute { augmented, threshold };

/// Merges rule-set alternatives and reduces the merged network. The
/// augmented route is the general one; the threshold route applies when the
/// merged rules are unit-weight signed thresholds and reproduces the
/// max/min-threshold specialization exactly.
TssInstance merge_probabilistic(const RegulatoryNetwork& net, const State& x_star,
                                MergeRoute route = MergeRoute::augmented,
                                SignedThresholdNet* out_classes = nullptr);

/// The cycle-breaking baseline's sufficient condition on the original graph:
/// every cycle meets S and every node is connected (ignoring direction) to a
/// node of S.
bool baseline_implies_target(const RegulatoryNetwork& net, const std::vector<int>& S);

/// Genes behind an instance solution: the distinct owners of its members.
std::vector<int> target_genes(const TssInstance& inst, const std::vector<int>& members);

/// Instance nodes owned by the given genes (all copies, originals only).
std::vector<int> gene_seed_nodes(const TssInstance& inst, const std::vector<int>& genes);

}  // namespace bnc
