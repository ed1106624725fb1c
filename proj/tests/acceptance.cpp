// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one check per release criterion, each printing a
// [PASS]/[FAIL] line. The process exits non-zero if any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <thread>

#include "bnc/experiment.hpp"
#include "bnc/io.hpp"
#include "bnc/solvers.hpp"
#include "support.hpp"

using namespace bnc;
using testutil::bootstrap_diff_lower_bound;
using testutil::bootstrap_mean_lower_bound;
using testutil::brute_min_target_set;
using testutil::exhaustive_sufficient;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void report(const std::string& id, const std::string& title,
            const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!outcome.pass) ++g_failures;
  std::printf("[%s] %s %s: %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL", id.c_str(),
              title.c_str(), outcome.detail.c_str(), seconds);
  std::fflush(stdout);
}

// ---------------------------------------------------------------- C1

// reduce -> solve -> exhaustively verify; every produced set must certify
struct SufficiencyTally {
  int networks = 0;
  int sets = 0;
  int counterexamples = 0;
};

void check_set(const RegulatoryNetwork& net, const State& x_star, const std::vector<int>& genes,
               SufficiencyTally& tally) {
  ++tally.sets;
  if (!exhaustive_sufficient(net, x_star, genes)) ++tally.counterexamples;
}

Outcome criterion1() {
  SufficiencyTally tally;
  Rng rng(1001);

  // signed threshold networks, exact and greedy
  int done = 0;
  while (done < 60) {
    int n = 4 + rng.below_int(6);
    RegulatoryNetwork net = testutil::random_signed_threshold_net(rng, n, 0.3);
    std::vector<State> points = find_fixed_points(net);
    if (points.empty()) continue;
    ++done;
    ++tally.networks;
    TssInstance inst = build_threshold_tss(net, points[0]);
    check_set(net, points[0], solve_exact(inst).members, tally);
    check_set(net, points[0], solve_greedy(inst).members, tally);
  }

  // complete signed networks, clique solver
  done = 0;
  while (done < 20) {
    int n = 3 + rng.below_int(5);
    RegulatoryNetwork net = testutil::random_signed_threshold_net(rng, n, 1.0, false);
    std::vector<State> points = find_fixed_points(net);
    if (points.empty()) continue;
    ++done;
    ++tally.networks;
    SignedThresholdNet classes;
    TssInstance inst = build_threshold_tss(net, points[0], &classes);
    check_set(net, points[0], solve_clique(inst, classes).members, tally);
  }

  // block-cactus networks, cactus solver
  done = 0;
  while (done < 15) {
    GenSpec spec;
    spec.family = GenSpec::Family::block_cactus;
    spec.cactus_blocks = {1 + rng.below_int(3), 1 + rng.below_int(3), 1 + rng.below_int(3)};
    spec.n = spec.cactus_blocks[0] + spec.cactus_blocks[1] + spec.cactus_blocks[2];
    spec.seed = rng.next();
    RegulatoryNetwork net = generate(spec);
    std::vector<State> points = find_fixed_points(net);
    if (points.empty()) continue;
    ++done;
    ++tally.networks;
    SignedThresholdNet classes;
    TssInstance inst = build_threshold_tss(net, points[0], &classes);
    check_set(net, points[0], solve_block_cactus(inst, *partition_of(spec), classes).members,
              tally);
  }

  // general truth-table networks, clause-graph reduction
  done = 0;
  while (done < 60) {
    int n = 4 + rng.below_int(5);
    RegulatoryNetwork net = testutil::random_table_net(rng, n, 3);
    std::vector<State> points = find_fixed_points(net);
    if (points.empty()) continue;
    ++done;
    ++tally.networks;
    TssInstance inst = build_augmented(net, points[0]);
    ExactOptions opts;
    opts.coverage = Coverage::originals;
    check_set(net, points[0], solve_exact(inst, opts).members, tally);
    GreedyOptions gopts;
    gopts.coverage = Coverage::originals;
    check_set(net, points[0], solve_greedy(inst, gopts).members, tally);
  }

  // nested canalyzing networks, rank reduction
  done = 0;
  while (done < 50) {
    int n = 4 + rng.below_int(5);
    RegulatoryNetwork net = testutil::random_nc_net(rng, n, 3);
    std::vector<State> points = find_fixed_points(net);
    if (points.empty()) continue;
    ++done;
    ++tally.networks;
    TssInstance inst = build_nc_full(net, points[0]);
    ExactOptions opts;
    opts.coverage = Coverage::originals;
    check_set(net, points[0], solve_exact(inst, opts).members, tally);
  }

  // nested canalyzing networks, unanimous reduction + component solver
  done = 0;
  while (done < 20) {
    int n = 4 + rng.below_int(5);
    RegulatoryNetwork net = testutil::random_nc_net(rng, n, 3);
    std::vector<State> points = find_fixed_points(net);
    if (points.empty()) continue;
    TssInstance inst;
    try {
      inst = build_nc_unanimous(net, points[0]);
    } catch (const Error& e) {
      if (e.code() == errc::no_canalyzing_rank) continue;
      throw;
    }
    ++done;
    ++tally.networks;
    check_set(net, points[0], solve_unanimous_fvs(inst).members, tally);
  }

  // cyclic attractors, per-state copies with replayed pins
  done = 0;
  while (done < 30) {
    int n = 3 + rng.below_int(4);
    RegulatoryNetwork net = testutil::random_table_net(rng, n, 3);
    State start(n);
    for (int v = 0; v < n; ++v) start.set(v, rng.next() & 1ULL);
    Attractor cycle = find_attractor_from(net, start);
    if (cycle.length() < 2 || cycle.length() > 4) continue;
    ++done;
    ++tally.networks;
    TssInstance inst = build_cyclic(net, cycle);
    GreedyOptions gopts;
    gopts.coverage = Coverage::originals;
    std::vector<int> genes = target_genes(inst, solve_greedy(inst, gopts).members);
    ++tally.sets;
    if (!verify_cyclic(net, cycle, genes).all_converged()) ++tally.counterexamples;
  }

  Outcome out;
  out.pass = tally.counterexamples == 0 && tally.networks >= 200;
  out.detail = std::to_string(tally.networks) + " networks, " + std::to_string(tally.sets) +
               " input sets, " + std::to_string(tally.counterexamples) + " counterexamples";
  return out;
}

// ---------------------------------------------------------------- C2

Outcome criterion2() {
  Rng rng(1002);
  int instances = 0, mismatches = 0;
  for (int trial = 0; trial < 110; ++trial) {
    int m = 3 + rng.below_int(10);  // up to 12
    TssInstance inst = testutil::random_instance(rng, m, 0.3);
    TargetSet fast = solve_exact(inst);
    auto brute = brute_min_target_set(inst, Coverage::all_nodes, true);
    ++instances;
    if (!brute || fast.members != *brute) ++mismatches;
  }
  return {mismatches == 0 && instances >= 100,
          std::to_string(instances) + " instances, " + std::to_string(mismatches) +
              " mismatches (cardinality and tie-break)"};
}

// ---------------------------------------------------------------- C3

Outcome criterion3() {
  Rng rng(1003);
  int cliques = 0, cacti = 0, mismatches = 0;
  while (cliques < 100) {
    int n = 2 + rng.below_int(9);  // up to 10
    auto [inst, classes] = testutil::random_clique_instance(rng, n, n + 1);
    TargetSet fast = solve_clique(inst, classes);
    auto brute = brute_min_target_set(inst, Coverage::all_nodes, true);
    ++cliques;
    if (!brute || fast.size() != static_cast<int>(brute->size()) ||
        !is_target_set(inst, fast.members))
      ++mismatches;
  }
  while (cacti < 50) {
    auto [inst, partition, classes] = testutil::random_cactus_instance(rng, 4, 12);
    TargetSet fast = solve_block_cactus(inst, partition, classes);
    auto brute = brute_min_target_set(inst, Coverage::all_nodes, true);
    ++cacti;
    if (!brute || fast.size() != static_cast<int>(brute->size()) ||
        !is_target_set(inst, fast.members))
      ++mismatches;
  }
  return {mismatches == 0,
          std::to_string(cliques) + " cliques + " + std::to_string(cacti) + " cacti, " +
              std::to_string(mismatches) + " mismatches"};
}

// ---------------------------------------------------------------- C4

// mask-based unanimous cascade and structural conditions for the exhaustive
// sweep; cross-checked against the library implementation on a sample
struct MaskGraph {
  int n;
  uint32_t in[5];
};

bool mask_valid(const MaskGraph& g, uint32_t seed) {
  uint32_t full = (1u << g.n) - 1;
  uint32_t active = seed;
  while (true) {
    uint32_t fresh = 0;
    for (int v = 0; v < g.n; ++v) {
      uint32_t bit = 1u << v;
      if ((active & bit) == 0 && (g.in[v] & ~active) == 0) fresh |= bit;
    }
    if (fresh == 0) break;
    active |= fresh;
  }
  return active == full;
}

bool mask_conditions(const MaskGraph& g, uint32_t seed) {
  uint32_t full = (1u << g.n) - 1;
  // every cycle hits the seed: peel source nodes from the complement
  uint32_t kept = full & ~seed;
  while (true) {
    uint32_t removable = 0;
    for (int v = 0; v < g.n; ++v) {
      uint32_t bit = 1u << v;
      if ((kept & bit) && (g.in[v] & kept) == 0) removable |= bit;
    }
    if (removable == 0) break;
    kept &= ~removable;
  }
  if (kept != 0) return false;
  // every node reachable from the seed plus the self-firing roots
  uint32_t reached = seed;
  for (int v = 0; v < g.n; ++v)
    if (g.in[v] == 0) reached |= 1u << v;
  while (true) {
    uint32_t fresh = 0;
    for (int v = 0; v < g.n; ++v) {
      uint32_t bit = 1u << v;
      if ((reached & bit) == 0 && (g.in[v] & reached) != 0) fresh |= bit;
    }
    if (fresh == 0) break;
    reached |= fresh;
  }
  return reached == full;
}

Outcome criterion4() {
  // exhaustive sweep over every digraph with up to five nodes
  std::atomic<long long> mismatches{0};
  std::atomic<long long> graphs{0};
  for (int n = 1; n <= 5; ++n) {
    long long total = 1LL << (n * n);
    int threads = n == 5 ? static_cast<int>(std::thread::hardware_concurrency()) : 1;
    if (threads < 1) threads = 1;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t, n, total, threads] {
        long long local_mismatch = 0, local_graphs = 0;
        for (long long code = t; code < total; code += threads) {
          MaskGraph g;
          g.n = n;
          for (int v = 0; v < n; ++v)
            g.in[v] = (static_cast<uint64_t>(code) >> (v * n)) & ((1u << n) - 1);
          ++local_graphs;
          for (uint32_t seed = 0; seed < (1u << n); ++seed)
            if (mask_valid(g, seed) != mask_conditions(g, seed)) ++local_mismatch;
        }
        mismatches += local_mismatch;
        graphs += local_graphs;
      });
    }
    for (auto& worker : pool) worker.join();
  }

  // cross-check the mask engine against the library on sampled graphs, and
  // run larger random instances through the library directly
  Rng rng(1004);
  long long library_mismatches = 0;
  int random_networks = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + rng.below_int(7);  // up to 8
    std::vector<std::vector<int>> in_edges(n);
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < n; ++j)
        if (rng.bernoulli(0.3)) in_edges[v].push_back(j);
    std::vector<int> tau;
    for (const auto& ins : in_edges) tau.push_back(static_cast<int>(ins.size()));
    TssInstance inst = TssInstance::plain(in_edges, tau);
    ++random_networks;
    for (uint32_t seed_mask = 0; seed_mask < (1u << n); ++seed_mask) {
      std::vector<int> seed;
      for (int v = 0; v < n; ++v)
        if ((seed_mask >> v) & 1u) seed.push_back(v);
      bool valid = is_target_set(inst, seed);
      bool conditions = prop_conditions_unanimous(inst, seed);
      if (valid != conditions) ++library_mismatches;
      if (n <= 5) {
        MaskGraph g;
        g.n = n;
        for (int v = 0; v < n; ++v) {
          g.in[v] = 0;
          for (int j : inst.in_edges[v]) g.in[v] |= 1u << j;
        }
        if (mask_valid(g, seed_mask) != valid) ++library_mismatches;
        if (mask_conditions(g, seed_mask) != conditions) ++library_mismatches;
      }
    }
  }

  bool pass = mismatches == 0 && library_mismatches == 0;
  return {pass, std::to_string(graphs.load()) + " exhaustive digraphs (n<=5) + " +
                    std::to_string(random_networks) + " random (n<=8), " +
                    std::to_string(mismatches.load() + library_mismatches) +
                    " equivalence violations"};
}

// ---------------------------------------------------------------- C5

Outcome criterion5() {
  Rng rng(1005);
  int nets = 0, invalid = 0;
  std::vector<double> baseline_sizes, tss_sizes;
  while (nets < 100) {
    int n = 6 + rng.below_int(4);
    RegulatoryNetwork net = testutil::random_table_net(rng, n, 3);
    std::vector<State> points = find_fixed_points(net);
    if (points.empty()) continue;
    ++nets;
    TargetSet baseline = solve_cycle_baseline(net);
    TssInstance inst = build_augmented(net, points[0]);
    if (!is_target_set(inst, baseline.members, Coverage::originals)) ++invalid;
    ExactOptions opts;
    opts.coverage = Coverage::originals;
    TargetSet exact = solve_exact(inst, opts);
    baseline_sizes.push_back(baseline.size());
    tss_sizes.push_back(exact.size());
  }
  // strict dominance on average at 95% bootstrap confidence
  std::vector<double> diffs;
  for (size_t i = 0; i < baseline_sizes.size(); ++i)
    diffs.push_back(baseline_sizes[i] - tss_sizes[i]);
  double lower = bootstrap_mean_lower_bound(diffs, 10000, 0.05, 77);
  bool pass = invalid == 0 && lower > 0.0;
  char buffer[160];
  std::snprintf(buffer, sizeof buffer,
                "%d networks, %d invalid baseline sets, mean diff lower bound %.2f", nets,
                invalid, lower);
  return {pass, buffer};
}

// ---------------------------------------------------------------- C6

Outcome criterion6() {
  Rng rng(1006);
  int instances = 0, bound_violations = 0, invalid = 0;
  std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {3, 1}, {5, 1}, {7, 1},
                                          {11, 1}, {15, 1}, {1, 2}, {1, 3}, {1, 4},
                                          {2, 2}, {3, 2}};
  for (const auto& [k, depth] : shapes) {
    int n = 1;
    for (int d = 0; d < depth; ++d) n *= k + 1;
    if (n > 16) continue;
    int done = 0, attempts = 0;
    while (done < 5 && attempts < 200) {
      ++attempts;
      GenSpec spec;
      spec.family = GenSpec::Family::hierarchical;
      spec.hier_k = k;
      spec.hier_depth = depth;
      spec.n = n;
      spec.seed = rng.next();
      RegulatoryNetwork net = generate(spec);
      std::vector<State> points = find_fixed_points(net);
      if (points.empty()) continue;
      ++done;
      ++instances;
      SignedThresholdNet classes;
      TssInstance inst = build_threshold_tss(net, points[0], &classes);
      TargetSet s = solve_hierarchical(inst, HierarchySpec{k, depth, 0}, classes);
      if (!is_target_set(inst, s.members)) ++invalid;
      ExactOptions opts;
      opts.candidate_budget = 16;
      TargetSet exact = solve_exact(inst, opts);
      int log_n = 0;
      while ((1 << log_n) < n) ++log_n;
      log_n = std::max(log_n, 1);
      if (s.size() > log_n * std::max(exact.size(), 1)) ++bound_violations;
    }
  }
  return {instances >= 40 && invalid == 0 && bound_violations == 0,
          std::to_string(instances) + " hierarchical instances, " + std::to_string(invalid) +
              " invalid outputs, " + std::to_string(bound_violations) + " bound violations"};
}

// ---------------------------------------------------------------- C7

Outcome criterion7() {
  Rng rng(1007);
  int cases = 0, equality_failures = 0;
  long long trials_run = 0, failures = 0;
  while (cases < 50) {
    int n = 4 + rng.below_int(5);
    RegulatoryNetwork prob = testutil::random_threshold_ruleset_net(rng, n, 0.4);
    State ones(n, true);
    ++cases;

    // instance equality against the max-threshold network
    std::vector<UpdateRule> max_rules;
    for (const auto& rule : prob.rules) {
      const auto& set = std::get<RuleSet>(rule);
      ThresholdRule merged = std::get<ThresholdRule>(set.alternatives[0]);
      for (const auto& alt : set.alternatives)
        merged.tau = std::max(merged.tau, std::get<ThresholdRule>(alt).tau);
      max_rules.push_back(merged);
    }
    RegulatoryNetwork max_net = RegulatoryNetwork::from_rules(std::move(max_rules), prob.names);
    TssInstance via_merge = merge_probabilistic(prob, ones, MergeRoute::threshold);
    if (!(via_merge == build_threshold_tss(max_net, ones))) {
      ++equality_failures;
      continue;
    }

    TargetSet s = solve_greedy(via_merge);
    InputSet pins = InputSet::from_target(s.members, ones);
    Attractor target{{ones}};
    VerificationReport async = verify_monte_carlo(max_net, target, pins,
                                                  Schedule::async_uniform, 1000, 81 + cases);
    VerificationReport stochastic = verify_monte_carlo(
        prob, target, pins, Schedule::stochastic_uniform, 1000, 181 + cases);
    trials_run += async.trials + stochastic.trials;
    failures += (async.trials - async.converged) + (stochastic.trials - stochastic.converged);
  }
  return {equality_failures == 0 && failures == 0,
          std::to_string(cases) + " rule-set cases, " + std::to_string(equality_failures) +
              " instance mismatches, " + std::to_string(failures) + " of " +
              std::to_string(trials_run) + " trials failed"};
}

// ---------------------------------------------------------------- C8

struct TrendCell {
  std::vector<double> sizes;
  int unverified = 0;
};

// the documented harness conventions: richest fixed point as the target and
// cascade thresholds floored at one (conservative, so certificates hold)
TrendCell run_cell(GenSpec spec, int trials, Rng& rng) {
  TrendCell cell;
  int done = 0, attempts = 0;
  while (done < trials && attempts < trials * 80) {
    ++attempts;
    spec.seed = rng.next();
    RegulatoryNetwork net = generate(spec);
    FixedPointOptions fp;
    fp.limit = 1;
    fp.prefer_ones = true;
    std::vector<State> points = find_fixed_points(net, fp);
    if (points.empty()) continue;
    ++done;
    TssInstance inst = build_threshold_tss(net, points[0]);
    for (int v = 0; v < inst.m; ++v) inst.tau[v] = std::max(inst.tau[v], 1);
    TargetSet s = solve_greedy(inst);
    cell.sizes.push_back(s.size());
    InputSet pins = InputSet::from_target(s.members, points[0]);
    Attractor target{{points[0]}};
    int free = net.n - s.size();
    bool ok;
    if (free <= 16) {
      ok = verify_exhaustive(net, target, pins).all_converged();
    } else {
      ok = verify_monte_carlo(net, target, pins, Schedule::synchronous, 50, spec.seed ^ 0xABCD)
               .all_converged();
    }
    if (!ok) ++cell.unverified;
  }
  return cell;
}

Outcome criterion8() {
  Rng rng(1008);
  int unverified = 0;
  bool directional = true;
  std::string detail;

  // scale-free vs matched-degree random graphs
  for (int n : {10, 20, 40}) {
    GenSpec sf;
    sf.family = GenSpec::Family::scale_free;
    sf.sf_m = 2;
    sf.sf_old_to_new = true;
    sf.n = n;
    GenSpec er;
    er.family = GenSpec::Family::erdos_renyi;
    er.er_p = 2.0 / static_cast<double>(n - 1);  // matches the attachment average degree
    er.n = n;
    TrendCell sf_cell = run_cell(sf, 20, rng);
    TrendCell er_cell = run_cell(er, 20, rng);
    unverified += sf_cell.unverified + er_cell.unverified;
    double lower =
        bootstrap_diff_lower_bound(er_cell.sizes, sf_cell.sizes, 4000, 0.05, 500 + n);
    if (lower < 0.0) directional = false;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, " n=%d: er-sf>=%.2f", n, lower);
    detail += buffer;
  }

  // attachment-parameter sweep
  std::vector<std::vector<double>> sweeps;
  for (int m : {1, 2, 4}) {
    GenSpec sf;
    sf.family = GenSpec::Family::scale_free;
    sf.sf_m = m;
    sf.sf_old_to_new = true;
    sf.n = 20;
    TrendCell cell = run_cell(sf, 60, rng);
    unverified += cell.unverified;
    sweeps.push_back(cell.sizes);
  }
  for (size_t i = 0; i + 1 < sweeps.size(); ++i) {
    double lower = bootstrap_diff_lower_bound(sweeps[i], sweeps[i + 1], 4000, 0.05, 700 + i);
    if (lower < 0.0) directional = false;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, " m-step %zu: >=%.2f", i, lower);
    detail += buffer;
  }

  return {directional && unverified == 0,
          "every row verified (" + std::to_string(unverified) + " failures);" + detail};
}

// ---------------------------------------------------------------- C9

Outcome criterion9() {
  Rng rng(1009);
  long long rules_checked = 0, fidelity_failures = 0;
  // conversions up to fan-in 10 across rule shapes
  for (int trial = 0; trial < 150; ++trial) {
    int n = 11;
    RegulatoryNetwork net;
    switch (trial % 3) {
      case 0: net = testutil::random_table_net(rng, n, 10); break;
      case 1: net = testutil::random_nc_net(rng, n, 10); break;
      default: net = testutil::random_signed_threshold_net(rng, n, 0.5); break;
    }
    for (const UpdateRule& rule : net.rules) {
      CnfForm cnf = rule_to_cnf(rule);
      std::vector<NodeId> support = rule_support(rule);
      int d = static_cast<int>(support.size());
      State probe(n);
      bool ok = true;
      for (uint32_t idx = 0; idx < (1u << d) && ok; ++idx) {
        for (int k = 0; k < d; ++k) probe.set(support[k], (idx >> k) & 1u);
        if (evaluate_rule(rule, probe) != cnf_eval(cnf, probe)) ok = false;
      }
      ++rules_checked;
      if (!ok) ++fidelity_failures;
    }
  }

  // byte-identical round trips on generated corpora
  int documents = 0, round_trip_failures = 0;
  for (int i = 0; i < 60; ++i) {
    RegulatoryNetwork net;
    switch (i % 4) {
      case 0: net = testutil::random_table_net(rng, 3 + rng.below_int(6), 4); break;
      case 1: net = testutil::random_nc_net(rng, 3 + rng.below_int(6), 4); break;
      case 2: net = testutil::random_signed_threshold_net(rng, 3 + rng.below_int(6), 0.4); break;
      default: net = testutil::random_threshold_ruleset_net(rng, 3 + rng.below_int(5), 0.4); break;
    }
    NetworkDocument doc{net, std::nullopt};
    if (i % 5 == 0 && net.deterministic()) {
      std::vector<State> points = find_fixed_points(net);
      if (!points.empty()) doc.attractor = Attractor{{points[0]}};
    }
    std::string text = serialize_network(doc);
    ++documents;
    if (serialize_network(parse_network(text)) != text) ++round_trip_failures;
  }
  for (int i = 0; i < 60; ++i) {
    TssInstance inst;
    if (i % 3 == 2) {
      RegulatoryNetwork net = testutil::random_table_net(rng, 4, 3);
      std::vector<State> points = find_fixed_points(net);
      if (points.empty()) continue;
      inst = build_augmented(net, points[0]);
    } else {
      inst = testutil::random_instance(rng, 2 + rng.below_int(9), 0.4);
    }
    std::string text = serialize_tss(inst);
    ++documents;
    if (serialize_tss(parse_tss(text)) != text || !(parse_tss(text) == inst))
      ++round_trip_failures;
  }

  return {fidelity_failures == 0 && round_trip_failures == 0,
          std::to_string(rules_checked) + " rules faithful (" +
              std::to_string(fidelity_failures) + " fail), " + std::to_string(documents) +
              " documents round-tripped (" + std::to_string(round_trip_failures) + " fail)"};
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  report("C1", "sufficiency soundness across all rule classes", criterion1);
  report("C2", "exact solver equals whole-subset enumeration", criterion2);
  report("C3", "clique and cactus solvers are exact", criterion3);
  report("C4", "unanimous-threshold validity characterization", criterion4);
  report("C5", "cycle-baseline dominance", criterion5);
  report("C6", "hierarchical solver bound and validity", criterion6);
  report("C7", "rule-set merge equality and schedule robustness", criterion7);
  report("C8", "trend reproduction on random families", criterion8);
  report("C9", "cnf fidelity and format round-trips", criterion9);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
