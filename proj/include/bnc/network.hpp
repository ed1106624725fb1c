// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bnc/state.hpp"

namespace bnc {

using NodeId = int;

/// Explicit truth table. `inputs` is sorted ascending and inputs[0] is the
/// most significant bit of the table index.
struct TruthTableRule {
  std::vector<NodeId> inputs;
  std::vector<uint8_t> table;  // size 1 << inputs.size()
};

/// Fires when the weighted sum of in-neighbor states reaches tau.
struct ThresholdRule {
  std::vector<std::pair<NodeId, double>> weights;  // sorted by node
  double tau = 0.0;
};

/// Ranked inputs; the first rank l whose input matches canalyzing[l] decides
/// the output as canalyzed[l], otherwise the rule falls back to `fallback`.
struct NestedCanalyzingRule {
  std::vector<NodeId> order;
  std::vector<uint8_t> canalyzing;  // b_1..b_d
  std::vector<uint8_t> canalyzed;   // a_1..a_d
  uint8_t fallback = 0;             // a_{d+1}
};

using BasicRule = std::variant<TruthTableRule, ThresholdRule, NestedCanalyzingRule>;

/// One alternative per realization of a probabilistic network.
struct RuleSet {
  std::vector<BasicRule> alternatives;
};

using UpdateRule = std::variant<TruthTableRule, ThresholdRule, NestedCanalyzingRule, RuleSet>;

struct RegulatoryNetwork {
  int n = 0;
  std::vector<std::vector<NodeId>> in_edges;  // duplicate-free, sorted
  std::vector<UpdateRule> rules;
  std::vector<std::string> names;  // defaults to x1..xn

  /// Builds a network whose in-edges are exactly the rule supports.
  static RegulatoryNetwork from_rules(std::vector<UpdateRule> rules,
                                      std::vector<std::string> names = {});

  void validate() const;
  const std::string& name(NodeId i) const { return names[i]; }
  NodeId node_by_name(const std::string& name) const;  // -1 when absent

  /// Largest alternative count over all RuleSet nodes (1 for plain rules).
  int alternative_count() const;
  /// True when no node carries a RuleSet with two or more alternatives.
  bool deterministic() const;
};

std::vector<NodeId> rule_support(const BasicRule& rule);
std::vector<NodeId> rule_support(const UpdateRule& rule);

inline constexpr int kNoAlternative = -1;

/// Evaluates one node's rule on a full network state. `alternative` selects
/// a RuleSet member; plain rules ignore it, and a RuleSet with a single
/// alternative acts as that rule for every index.
bool evaluate_rule(const UpdateRule& rule, const State& state, int alternative = kNoAlternative);

State step_synchronous(const RegulatoryNetwork& net, const State& state,
                       const InputSet& pins = {});
State step_asynchronous(const RegulatoryNetwork& net, const State& state, const InputSet& pins,
                        NodeId active);
State step_stochastic(const RegulatoryNetwork& net, const State& state, const InputSet& pins,
                      int alternative);

struct Attractor {
  std::vector<State> states;
  int length() const { return static_cast<int>(states.size()); }
  bool is_fixed_point() const { return states.size() == 1; }
  bool operator==(const Attractor&) const = default;
};

bool attractor_valid(const RegulatoryNetwork& net, const Attractor& a);
bool same_up_to_rotation(const Attractor& a, const Attractor& b);

struct SimulationResult {
  State final;          // state at the step where iteration stopped
  int steps = 0;        // synchronous steps taken
  bool cycle_found = false;
  int cycle_start = 0;  // time index of the first state on the cycle
  Attractor cycle;      // populated when cycle_found
};

/// Iterates the pinned synchronous dynamics from `initial` until a state
/// repeats or max_steps is exhausted. The initial state must agree with the
/// pins.
SimulationResult simulate_pinned(const RegulatoryNetwork& net, const State& initial,
                                 const InputSet& pins, int max_steps);

/// Follows the trajectory until it closes and returns the cycle in visit
/// order. Always terminates: the state space is finite.
Attractor find_attractor_from(const RegulatoryNetwork& net, const State& initial,
                              const InputSet& pins = {});

struct FixedPointOptions {
  int limit = 1 << 30;            // maximum number of fixed points returned
  int brute_force_bound = 22;     // exhaustive enumeration cutoff on n
  long long node_budget = 1LL << 26;  // backtracking search budget
  bool prefer_ones = false;       // search the 1-branch first (descending order)
};

/// All states x with f(x) = x, in lexicographic order (node 0 is the most
/// significant position). Uses exhaustive enumeration for small n and a
/// pruned backtracking search when every rule is a threshold rule.
std::vector<State> find_fixed_points(const RegulatoryNetwork& net,
                                     const FixedPointOptions& opts = {});

}  // namespace bnc
