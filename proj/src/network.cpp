// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/network.hpp"

#include <algorithm>
#include <unordered_map>

namespace bnc {

namespace {

void append_support(const BasicRule& rule, std::vector<NodeId>& out) {
  std::visit(
      [&out](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, TruthTableRule>) {
          out.insert(out.end(), r.inputs.begin(), r.inputs.end());
        } else if constexpr (std::is_same_v<T, ThresholdRule>) {
          for (const auto& [node, weight] : r.weights) out.push_back(node);
        } else {
          out.insert(out.end(), r.order.begin(), r.order.end());
        }
      },
      rule);
}

std::vector<NodeId> dedup_sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool eval_basic(const BasicRule& rule, const State& state) {
  return std::visit(
      [&state](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, TruthTableRule>) {
          size_t idx = 0;
          int d = static_cast<int>(r.inputs.size());
          for (int k = 0; k < d; ++k) {
            NodeId j = r.inputs[k];
            if (j < 0 || j >= state.size()) raise(errc::index_out_of_range, "rule input out of range");
            if (state.get(j)) idx |= size_t{1} << (d - 1 - k);
          }
          if (idx >= r.table.size()) raise(errc::invalid_argument, "truth table too short");
          return r.table[idx] != 0;
        } else if constexpr (std::is_same_v<T, ThresholdRule>) {
          double sum = 0.0;
          for (const auto& [node, weight] : r.weights) {
            if (node < 0 || node >= state.size()) raise(errc::index_out_of_range, "rule input out of range");
            if (state.get(node)) sum += weight;
          }
          return sum >= r.tau;
        } else {
          for (size_t l = 0; l < r.order.size(); ++l) {
            NodeId j = r.order[l];
            if (j < 0 || j >= state.size()) raise(errc::index_out_of_range, "rule input out of range");
            if (state.get(j) == (r.canalyzing[l] != 0)) return r.canalyzed[l] != 0;
          }
          return r.fallback != 0;
        }
      },
      rule);
}

}  // namespace

std::vector<NodeId> rule_support(const BasicRule& rule) {
  std::vector<NodeId> out;
  append_support(rule, out);
  return dedup_sorted(std::move(out));
}

std::vector<NodeId> rule_support(const UpdateRule& rule) {
  std::vector<NodeId> out;
  if (const auto* set = std::get_if<RuleSet>(&rule)) {
    for (const auto& alt : set->alternatives) append_support(alt, out);
  } else {
    std::visit(
        [&out](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (!std::is_same_v<T, RuleSet>) append_support(BasicRule{r}, out);
        },
        rule);
  }
  return dedup_sorted(std::move(out));
}

RegulatoryNetwork RegulatoryNetwork::from_rules(std::vector<UpdateRule> rules,
                                                std::vector<std::string> names) {
  RegulatoryNetwork net;
  net.n = static_cast<int>(rules.size());
  net.rules = std::move(rules);
  net.in_edges.resize(net.n);
  for (int i = 0; i < net.n; ++i) net.in_edges[i] = rule_support(net.rules[i]);
  if (names.empty()) {
    net.names.reserve(net.n);
    for (int i = 0; i < net.n; ++i) net.names.push_back("x" + std::to_string(i + 1));
  } else {
    net.names = std::move(names);
  }
  net.validate();
  return net;
}

void RegulatoryNetwork::validate() const {
  if (static_cast<int>(rules.size()) != n || static_cast<int>(in_edges.size()) != n ||
      static_cast<int>(names.size()) != n)
    raise(errc::invalid_argument, "network field sizes disagree with node count");
  for (int i = 0; i < n; ++i) {
    const auto& ins = in_edges[i];
    for (size_t k = 0; k < ins.size(); ++k) {
      if (ins[k] < 0 || ins[k] >= n) raise(errc::index_out_of_range, "in-edge out of range");
      if (k > 0 && ins[k] == ins[k - 1])
        raise(errc::invalid_argument, "duplicate in-neighbor for node " + names[i]);
    }
    for (NodeId j : rule_support(rules[i])) {
      if (!std::binary_search(ins.begin(), ins.end(), j))
        raise(errc::invalid_argument,
              "rule of node " + names[i] + " references a non in-neighbor");
    }
  }
}

NodeId RegulatoryNetwork::node_by_name(const std::string& name) const {
  for (int i = 0; i < n; ++i)
    if (names[i] == name) return i;
  return -1;
}

int RegulatoryNetwork::alternative_count() const {
  int k = 1;
  for (const auto& rule : rules)
    if (const auto* set = std::get_if<RuleSet>(&rule))
      k = std::max(k, static_cast<int>(set->alternatives.size()));
  return k;
}

bool RegulatoryNetwork::deterministic() const {
  for (const auto& rule : rules)
    if (const auto* set = std::get_if<RuleSet>(&rule))
      if (set->alternatives.size() > 1) return false;
  return true;
}

bool evaluate_rule(const UpdateRule& rule, const State& state, int alternative) {
  if (const auto* set = std::get_if<RuleSet>(&rule)) {
    if (set->alternatives.empty()) raise(errc::invalid_alternative, "empty rule set");
    if (alternative == kNoAlternative || alternative >= static_cast<int>(set->alternatives.size())) {
      if (set->alternatives.size() == 1) return eval_basic(set->alternatives[0], state);
      raise(errc::invalid_alternative, "rule set requires a valid alternative index");
    }
    if (alternative < 0) raise(errc::invalid_alternative, "negative alternative index");
    return eval_basic(set->alternatives[alternative], state);
  }
  return std::visit(
      [&state](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, RuleSet>) {
          return false;  // unreachable
        } else {
          return eval_basic(BasicRule{r}, state);
        }
      },
      rule);
}

namespace {

State step_impl(const RegulatoryNetwork& net, const State& state, const InputSet& pins,
                int alternative) {
  if (state.size() != net.n) raise(errc::dimension_mismatch, "state size differs from node count");
  State next(net.n);
  for (int i = 0; i < net.n; ++i) {
    if (auto pinned = pins.value(i)) {
      next.set(i, *pinned);
    } else {
      next.set(i, evaluate_rule(net.rules[i], state, alternative));
    }
  }
  return next;
}

}  // namespace

State step_synchronous(const RegulatoryNetwork& net, const State& state, const InputSet& pins) {
  if (!net.deterministic())
    raise(errc::invalid_alternative,
          "synchronous step on a probabilistic network; use step_stochastic");
  return step_impl(net, state, pins, kNoAlternative);
}

State step_asynchronous(const RegulatoryNetwork& net, const State& state, const InputSet& pins,
                        NodeId active) {
  if (state.size() != net.n) raise(errc::dimension_mismatch, "state size differs from node count");
  if (active < 0 || active >= net.n) raise(errc::index_out_of_range, "active node out of range");
  State next = state;
  if (auto pinned = pins.value(active)) {
    next.set(active, *pinned);
  } else {
    next.set(active, evaluate_rule(net.rules[active], state, kNoAlternative));
  }
  return next;
}

State step_stochastic(const RegulatoryNetwork& net, const State& state, const InputSet& pins,
                      int alternative) {
  if (alternative < 0) raise(errc::invalid_alternative, "negative alternative index");
  return step_impl(net, state, pins, alternative);
}

bool attractor_valid(const RegulatoryNetwork& net, const Attractor& a) {
  int r = a.length();
  if (r < 1) return false;
  for (int l = 0; l < r; ++l) {
    for (int m = l + 1; m < r; ++m)
      if (a.states[l] == a.states[m]) return false;
    if (step_synchronous(net, a.states[l]) != a.states[(l + 1) % r]) return false;
  }
  return true;
}

bool same_up_to_rotation(const Attractor& a, const Attractor& b) {
  int r = a.length();
  if (r != b.length()) return false;
  for (int off = 0; off < r; ++off) {
    bool match = true;
    for (int l = 0; l < r && match; ++l)
      if (a.states[l] != b.states[(l + off) % r]) match = false;
    if (match) return true;
  }
  return false;
}

SimulationResult simulate_pinned(const RegulatoryNetwork& net, const State& initial,
                                 const InputSet& pins, int max_steps) {
  if (!pins.agrees(initial))
    raise(errc::pin_mismatch, "initial state disagrees with the pinned values");
  if (max_steps < 1) raise(errc::invalid_argument, "max_steps must be at least 1");

  std::unordered_map<State, int, StateHash> seen;
  std::vector<State> trajectory;
  State current = initial;
  SimulationResult result;
  for (int t = 0;; ++t) {
    auto [it, inserted] = seen.emplace(current, t);
    if (!inserted) {
      result.final = current;
      result.steps = t;
      result.cycle_found = true;
      result.cycle_start = it->second;
      result.cycle.states.assign(trajectory.begin() + it->second, trajectory.end());
      return result;
    }
    trajectory.push_back(current);
    if (t == max_steps) {
      result.final = current;
      result.steps = t;
      return result;
    }
    current = step_synchronous(net, current, pins);
  }
}

Attractor find_attractor_from(const RegulatoryNetwork& net, const State& initial,
                              const InputSet& pins) {
  State start = initial;
  pins.apply(start);  // convergence analysis starts from a pin-consistent state
  std::unordered_map<State, int, StateHash> seen;
  std::vector<State> trajectory;
  State current = start;
  for (int t = 0;; ++t) {
    auto [it, inserted] = seen.emplace(current, t);
    if (!inserted) {
      Attractor cycle;
      cycle.states.assign(trajectory.begin() + it->second, trajectory.end());
      return cycle;
    }
    trajectory.push_back(current);
    current = step_synchronous(net, current, pins);
  }
}

namespace {

std::vector<State> fixed_points_brute(const RegulatoryNetwork& net, const FixedPointOptions& opts) {
  std::vector<State> out;
  uint64_t total = 1ULL << net.n;
  for (uint64_t step = 0; step < total; ++step) {
    uint64_t mask = opts.prefer_ones ? total - 1 - step : step;
    State s(net.n);
    for (int i = 0; i < net.n; ++i)
      if ((mask >> (net.n - 1 - i)) & 1ULL) s.set(i, true);
    if (step_synchronous(net, s) == s) {
      out.push_back(s);
      if (static_cast<int>(out.size()) >= opts.limit) break;
    }
  }
  return out;
}

struct ThresholdSearch {
  const RegulatoryNetwork& net;
  const FixedPointOptions& opts;
  std::vector<double> tau;
  std::vector<double> current;        // weighted sum over assigned inputs per node
  std::vector<double> pos_remaining;  // positive weight mass still unassigned per node
  std::vector<double> neg_remaining;  // negative weight mass still unassigned per node
  std::vector<std::vector<std::pair<int, double>>> feeds;  // j -> (node fed, weight)
  State assignment;
  std::vector<State> found;
  long long budget;

  explicit ThresholdSearch(const RegulatoryNetwork& network, const FixedPointOptions& options)
      : net(network), opts(options), assignment(network.n), budget(options.node_budget) {
    int n = net.n;
    tau.assign(n, 0.0);
    current.assign(n, 0.0);
    pos_remaining.assign(n, 0.0);
    neg_remaining.assign(n, 0.0);
    feeds.resize(n);
    for (int v = 0; v < n; ++v) {
      const auto& rule = std::get<ThresholdRule>(net.rules[v]);
      tau[v] = rule.tau;
      for (const auto& [j, w] : rule.weights) {
        feeds[j].push_back({v, w});
        if (w > 0)
          pos_remaining[v] += w;
        else
          neg_remaining[v] += w;
      }
    }
  }

  // Feasibility of node v's fixed-point constraint given bounds on its sum.
  bool feasible(int v, int depth) const {
    if (v > depth) return true;  // x_v not assigned yet
    if (assignment.get(v)) return current[v] + pos_remaining[v] >= tau[v];
    return current[v] + neg_remaining[v] < tau[v];
  }

  void assign(int j, bool value, int depth) {
    assignment.set(j, value);
    for (const auto& [v, w] : feeds[j]) {
      if (w > 0)
        pos_remaining[v] -= w;
      else
        neg_remaining[v] -= w;
      if (value) current[v] += w;
    }
    (void)depth;
  }

  void unassign(int j, bool value) {
    for (const auto& [v, w] : feeds[j]) {
      if (w > 0)
        pos_remaining[v] += w;
      else
        neg_remaining[v] += w;
      if (value) current[v] -= w;
    }
  }

  bool consistent_after(int j, int depth) {
    if (!feasible(j, depth)) return false;
    for (const auto& [v, w] : feeds[j])
      if (!feasible(v, depth)) return false;
    return true;
  }

  void search(int depth) {
    if (--budget < 0) raise(errc::search_budget_exceeded, "fixed-point search budget exhausted");
    if (static_cast<int>(found.size()) >= opts.limit) return;
    if (depth == net.n) {
      found.push_back(assignment);
      return;
    }
    for (bool value : {opts.prefer_ones, !opts.prefer_ones}) {
      assign(depth, value, depth);
      if (consistent_after(depth, depth)) search(depth + 1);
      unassign(depth, value);
      if (static_cast<int>(found.size()) >= opts.limit) return;
    }
    assignment.set(depth, false);
  }
};

}  // namespace

std::vector<State> find_fixed_points(const RegulatoryNetwork& net, const FixedPointOptions& opts) {
  if (!net.deterministic())
    raise(errc::invalid_argument, "fixed points of a probabilistic network are ill-defined");
  bool all_threshold = true;
  for (const auto& rule : net.rules)
    if (!std::holds_alternative<ThresholdRule>(rule)) all_threshold = false;

  if (all_threshold) {
    ThresholdSearch search(net, opts);
    search.search(0);
    return std::move(search.found);
  }
  if (net.n <= opts.brute_force_bound) return fixed_points_brute(net, opts);
  raise(errc::search_budget_exceeded,
        "network is too large for exhaustive search and has non-threshold rules");
}

}  // namespace bnc
