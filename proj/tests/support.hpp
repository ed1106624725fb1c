// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the test suites: deterministic random inputs,
// independent brute-force oracles, and a bootstrap routine. Everything here
// stays independent of the implementation paths it is used to check.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "bnc/gen.hpp"
#include "bnc/network.hpp"
#include "bnc/reduction.hpp"
#include "bnc/rng.hpp"
#include "bnc/tss.hpp"
#include "bnc/verify.hpp"

namespace testutil {

using namespace bnc;

// ---- random networks ----

inline RegulatoryNetwork random_table_net(Rng& rng, int n, int max_fanin) {
  std::vector<UpdateRule> rules(n);
  for (int i = 0; i < n; ++i) {
    int d = rng.below_int(std::min(max_fanin, n) + 1);
    std::vector<int> inputs;
    while (static_cast<int>(inputs.size()) < d) {
      int j = rng.below_int(n);
      if (std::find(inputs.begin(), inputs.end(), j) == inputs.end()) inputs.push_back(j);
    }
    std::sort(inputs.begin(), inputs.end());
    std::vector<uint8_t> table(size_t{1} << d);
    for (auto& bit : table) bit = rng.next() & 1ULL;
    rules[i] = TruthTableRule{inputs, table};
  }
  return RegulatoryNetwork::from_rules(std::move(rules));
}

inline RegulatoryNetwork random_nc_net(Rng& rng, int n, int max_fanin) {
  std::vector<UpdateRule> rules(n);
  for (int i = 0; i < n; ++i) {
    int d = rng.below_int(std::min(max_fanin, n) + 1);
    NestedCanalyzingRule rule;
    while (static_cast<int>(rule.order.size()) < d) {
      int j = rng.below_int(n);
      if (std::find(rule.order.begin(), rule.order.end(), j) == rule.order.end())
        rule.order.push_back(j);
    }
    for (int s = 0; s < d; ++s) {
      rule.canalyzing.push_back(rng.next() & 1ULL);
      rule.canalyzed.push_back(rng.next() & 1ULL);
    }
    rule.fallback = rng.next() & 1ULL;
    rules[i] = rule;
  }
  return RegulatoryNetwork::from_rules(std::move(rules));
}

inline RegulatoryNetwork random_signed_threshold_net(Rng& rng, int n, double edge_p,
                                                     bool allow_self_loops = true,
                                                     int tau_spread = 2) {
  std::vector<uint8_t> excitatory(n);
  for (int v = 0; v < n; ++v) excitatory[v] = rng.bernoulli(0.5) ? 1 : 0;
  std::vector<UpdateRule> rules(n);
  for (int i = 0; i < n; ++i) {
    ThresholdRule rule;
    for (int j = 0; j < n; ++j) {
      if (j == i && !allow_self_loops) continue;
      if (rng.bernoulli(edge_p)) rule.weights.push_back({j, excitatory[j] ? 1.0 : -1.0});
    }
    rule.tau = static_cast<double>(rng.below_int(2 * tau_spread + 1)) - tau_spread;
    rules[i] = rule;
  }
  return RegulatoryNetwork::from_rules(std::move(rules));
}

// Rule sets whose alternatives share weights and differ only in tau, with
// the all-ones state fixed under every alternative. Every node carries the
// same number of alternatives so any realization index is valid.
inline RegulatoryNetwork random_threshold_ruleset_net(Rng& rng, int n, double edge_p,
                                                      int max_alternatives = 3) {
  std::vector<uint8_t> excitatory(n);
  for (int v = 0; v < n; ++v) excitatory[v] = rng.bernoulli(0.5) ? 1 : 0;
  int k = 1 + rng.below_int(max_alternatives);
  std::vector<UpdateRule> rules(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, double>> weights;
    double sum_at_ones = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;  // the merge identity needs self-loop-free rules
      if (rng.bernoulli(edge_p)) {
        double w = excitatory[j] ? 1.0 : -1.0;
        weights.push_back({j, w});
        sum_at_ones += w;
      }
    }
    RuleSet set;
    for (int a = 0; a < k; ++a) {
      ThresholdRule rule;
      rule.weights = weights;
      rule.tau = sum_at_ones - static_cast<double>(rng.below_int(3));
      set.alternatives.push_back(rule);
    }
    rules[i] = set;
  }
  return RegulatoryNetwork::from_rules(std::move(rules));
}

// ---- random instances ----

inline TssInstance random_instance(Rng& rng, int m, double edge_p, int tau_slack = 1) {
  std::vector<std::vector<int>> in_edges(m);
  for (int v = 0; v < m; ++v)
    for (int j = 0; j < m; ++j)
      if (rng.bernoulli(edge_p)) in_edges[v].push_back(j);
  std::vector<int> tau(m);
  for (int v = 0; v < m; ++v)
    tau[v] = rng.below_int(static_cast<int>(in_edges[v].size()) + 1 + tau_slack);
  return TssInstance::plain(std::move(in_edges), std::move(tau));
}

// Signed-clique instance from random classes, thresholds, and fixed-point
// values; edges follow the class rule directly.
inline std::pair<TssInstance, SignedThresholdNet> random_clique_instance(Rng& rng, int n,
                                                                         int max_tau) {
  SignedThresholdNet classes;
  classes.excitatory.resize(n);
  std::vector<uint8_t> on(n);
  for (int v = 0; v < n; ++v) {
    classes.excitatory[v] = rng.bernoulli(0.5) ? 1 : 0;
    on[v] = rng.bernoulli(0.5) ? 1 : 0;
    bool exc = classes.excitatory[v] != 0;
    (exc ? (on[v] ? classes.e1 : classes.e0) : (on[v] ? classes.i1 : classes.i0)).push_back(v);
  }
  std::vector<std::vector<int>> in_edges(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool edge = classes.excitatory[u] ? on[u] == on[v] : on[u] != on[v];
      if (edge) in_edges[v].push_back(u);
    }
  std::vector<int> tau(n);
  for (int v = 0; v < n; ++v) tau[v] = rng.below_int(max_tau + 1);
  return {TssInstance::plain(std::move(in_edges), std::move(tau)), classes};
}

// Random class-consistent block-cactus instance: blocks follow the signed
// clique pattern, one cross arc per tree edge (kept only when the class rule
// admits it).
inline std::tuple<TssInstance, CliquePartition, SignedThresholdNet> random_cactus_instance(
    Rng& rng, int min_nodes, int max_nodes) {
  int remaining = min_nodes + rng.below_int(max_nodes - min_nodes + 1);
  std::vector<int> sizes;
  while (remaining > 0) {
    int size = 1 + rng.below_int(std::min(remaining, 4));
    sizes.push_back(size);
    remaining -= size;
  }
  int n = 0;
  for (int size : sizes) n += size;
  int nb = static_cast<int>(sizes.size());

  SignedThresholdNet classes;
  classes.excitatory.resize(n);
  std::vector<uint8_t> on(n);
  for (int v = 0; v < n; ++v) {
    classes.excitatory[v] = rng.bernoulli(0.5) ? 1 : 0;
    on[v] = rng.bernoulli(0.5) ? 1 : 0;
    bool exc = classes.excitatory[v] != 0;
    (exc ? (on[v] ? classes.e1 : classes.e0) : (on[v] ? classes.i1 : classes.i0)).push_back(v);
  }
  auto class_edge = [&](int u, int v) {
    return classes.excitatory[u] ? on[u] == on[v] : on[u] != on[v];
  };

  CliquePartition partition;
  int next = 0;
  for (int size : sizes) {
    std::vector<int> block(size);
    for (int& v : block) v = next++;
    partition.blocks.push_back(block);
  }
  std::vector<std::vector<int>> in_edges(n);
  for (const auto& block : partition.blocks)
    for (int u : block)
      for (int v : block)
        if (u != v && class_edge(u, v)) in_edges[v].push_back(u);
  for (int b = 1; b < nb; ++b) {
    int parent = rng.below_int(b);
    int u = partition.blocks[parent][rng.below_int(sizes[parent])];
    int v = partition.blocks[b][rng.below_int(sizes[b])];
    if (rng.bernoulli(0.5)) std::swap(u, v);
    if (class_edge(u, v)) in_edges[v].push_back(u);
  }
  std::vector<int> tau(n);
  for (int v = 0; v < n; ++v) tau[v] = rng.below_int(static_cast<int>(in_edges[v].size()) + 2);
  return {TssInstance::plain(std::move(in_edges), std::move(tau)), partition, classes};
}

// ---- brute-force oracles ----

inline std::optional<std::vector<int>> brute_min_target_set(const TssInstance& inst,
                                                            Coverage coverage,
                                                            bool restrict_to_original) {
  std::vector<int> candidates;
  if (restrict_to_original)
    candidates = inst.original_nodes();
  else
    for (int v = 0; v < inst.m; ++v) candidates.push_back(v);
  int c = static_cast<int>(candidates.size());
  for (int size = 0; size <= c; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<int> seed(size);
      for (int i = 0; i < size; ++i) seed[i] = candidates[idx[i]];
      if (is_target_set(inst, seed, coverage)) return seed;
      int i = size - 1;
      while (i >= 0 && idx[i] == c - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

inline std::vector<State> brute_fixed_points(const RegulatoryNetwork& net) {
  std::vector<State> out;
  for (uint64_t mask = 0; mask < (1ULL << net.n); ++mask) {
    State s(net.n);
    for (int i = 0; i < net.n; ++i)
      if ((mask >> (net.n - 1 - i)) & 1ULL) s.set(i, true);
    if (step_synchronous(net, s) == s) out.push_back(s);
  }
  return out;
}

// Direct dynamical check that pinning `genes` to x_star drives every
// pin-consistent initial state to x_star.
inline bool exhaustive_sufficient(const RegulatoryNetwork& net, const State& x_star,
                                  const std::vector<int>& genes) {
  InputSet pins = InputSet::from_target(genes, x_star);
  VerificationReport report = verify_exhaustive(net, Attractor{{x_star}}, pins);
  return report.all_converged();
}

// ---- statistics ----

// Lower bound of the one-sided bootstrap confidence interval for the mean.
inline double bootstrap_mean_lower_bound(const std::vector<double>& values, int resamples,
                                         double quantile, uint64_t seed) {
  Rng rng(seed);
  std::vector<double> means;
  means.reserve(resamples);
  for (int r = 0; r < resamples; ++r) {
    double sum = 0.0;
    for (size_t i = 0; i < values.size(); ++i)
      sum += values[rng.below(values.size())];
    means.push_back(sum / static_cast<double>(values.size()));
  }
  std::sort(means.begin(), means.end());
  size_t idx = static_cast<size_t>(quantile * static_cast<double>(means.size()));
  return means[std::min(idx, means.size() - 1)];
}

// Lower confidence bound for mean(a) - mean(b), two-sample bootstrap.
inline double bootstrap_diff_lower_bound(const std::vector<double>& a,
                                         const std::vector<double>& b, int resamples,
                                         double quantile, uint64_t seed) {
  Rng rng(seed);
  std::vector<double> diffs;
  diffs.reserve(resamples);
  for (int r = 0; r < resamples; ++r) {
    double sum_a = 0.0, sum_b = 0.0;
    for (size_t i = 0; i < a.size(); ++i) sum_a += a[rng.below(a.size())];
    for (size_t i = 0; i < b.size(); ++i) sum_b += b[rng.below(b.size())];
    diffs.push_back(sum_a / static_cast<double>(a.size()) -
                    sum_b / static_cast<double>(b.size()));
  }
  std::sort(diffs.begin(), diffs.end());
  size_t idx = static_cast<size_t>(quantile * static_cast<double>(diffs.size()));
  return diffs[std::min(idx, diffs.size() - 1)];
}

}  // namespace testutil
