// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnc/network.hpp"

namespace bnc {

enum class Schedule { synchronous, async_uniform, async_round_robin, stochastic_uniform };

std::string schedule_name(Schedule s);

struct Counterexample {
  State initial;
  long long trial = -1;  // -1 for exhaustive mode (initial states are ordered)
  std::string note;
};

/// Outcome of a convergence check. A counterexample is present exactly when
/// some trial failed to converge.
struct VerificationReport {
  enum class Mode { exhaustive, monte_carlo };
  Mode mode = Mode::exhaustive;
  long long trials = 0;
  long long converged = 0;
  int max_steps_observed = 0;
  std::optional<Counterexample> counterexample;
  bool all_converged() const { return trials > 0 && converged == trials; }
};

std::string report_to_json(const VerificationReport& report);

struct VerifyOptions {
  int horizon = 0;      // 0: one pass through the reachable pinned state space
  int free_limit = 20;  // exhaustive enumeration cap on unpinned nodes
  // also start from states that disagree with the pins; the pins overwrite
  // the pinned coordinates at the first step
  bool from_all_states = false;
};

/// Simulates the pinned synchronous dynamics from every initial state that
/// agrees with the pins and counts the trajectories whose eventual cycle is
/// the target attractor. The first failing initial state (in enumeration
/// order) is reported. With from_all_states every initial state is tried,
/// disagreeing ones included.
VerificationReport verify_exhaustive(const RegulatoryNetwork& net, const Attractor& target,
                                     const InputSet& pins, const VerifyOptions& opts = {});

/// Seeded random trials under the chosen schedule. Results are a pure
/// function of (seed, trials, schedule): each trial derives its own stream
/// from the master seed and its index.
VerificationReport verify_monte_carlo(const RegulatoryNetwork& net, const Attractor& target,
                                      const InputSet& pins, Schedule schedule, long long trials,
                                      uint64_t seed, int horizon = 0);

struct CyclicVerifyOptions {
  bool exhaustive = true;  // enumerate all free initial states when feasible
  long long trials = 256;  // sampled trials otherwise
  uint64_t seed = 0;
  int horizon = 0;
  int free_limit = 20;
};

/// Convergence to a cyclic attractor under replayed pins: the pinned genes
/// step through the attractor sequence periodically, and a trajectory
/// converges when its eventual cycle equals the attractor up to rotation.
VerificationReport verify_cyclic(const RegulatoryNetwork& net, const Attractor& attractor,
                                 const std::vector<int>& genes,
                                 const CyclicVerifyOptions& opts = {});

}  // namespace bnc
