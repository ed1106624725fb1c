// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "bnc/gen.hpp"

namespace bnc {

/// Trend-experiment recipe: one generated network per (family, size, trial),
/// solved by every requested solver and verified by simulation.
///
/// Two documented conventions shape the default runs. The target is the
/// lexicographically largest fixed point (the richest expression state), and
/// cascade thresholds are floored at one, so no node activates without an
/// active regulator. The floor only strengthens the condition, so every
/// selected set still certifies; both knobs are configurable.
struct ExperimentConfig {
  std::vector<GenSpec> families;  // n is overridden by `sizes`
  std::vector<int> sizes;
  int trials = 20;
  std::vector<std::string> solvers;  // tss-exact | tss-greedy | cycle-baseline
  uint64_t seed = 0;
  long long verify_trials = 50;   // sampled verification above the exhaustive cutoff
  int exhaustive_free_limit = 16; // exhaustive verification cutoff on free nodes
  int exact_budget = 16;          // tss-exact allowed up to this many candidates
  int generation_retries = 50;    // reseeded draws while hunting a fixed point
  bool ones_target = true;        // steer to the largest fixed point, not the smallest
  int min_threshold = 1;          // floor for cascade thresholds (0 disables)
};

struct ExperimentRow {
  std::string family;
  int n = 0;
  double param = 0.0;
  std::string solver;
  int trial = 0;
  int input_count = -1;  // -1 when the cell errored
  double runtime_ms = 0.0;
  bool verified = false;
  std::string error;  // empty on success
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
};

ExperimentResult run_trend_experiment(const ExperimentConfig& config);

/// One row per trial; columns family,n,param,solver,trial,input_count,
/// runtime_ms,verified. Failed cells carry input_count -1.
std::string rows_csv(const ExperimentResult& result);

/// Mean/stddev aggregation per (family, n, param, solver) cell.
std::string aggregate_csv(const ExperimentResult& result);

ExperimentConfig experiment_config_from_json(const std::string& text);

}  // namespace bnc
