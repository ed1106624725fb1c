// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/verify.hpp"

#include <algorithm>
#include <unordered_map>

#include "bnc/rng.hpp"
#include "json.hpp"

namespace bnc {

std::string schedule_name(Schedule s) {
  switch (s) {
    case Schedule::synchronous: return "synchronous";
    case Schedule::async_uniform: return "async-uniform";
    case Schedule::async_round_robin: return "async-round-robin";
    case Schedule::stochastic_uniform: return "stochastic-uniform";
  }
  return "?";
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["mode"] = report.mode == VerificationReport::Mode::exhaustive ? "exhaustive" : "monte-carlo";
  j["trials"] = report.trials;
  j["converged"] = report.converged;
  j["max_steps_observed"] = report.max_steps_observed;
  if (report.counterexample) {
    j["counterexample"] = {{"initial", report.counterexample->initial.to_string()},
                           {"trial", report.counterexample->trial},
                           {"note", report.counterexample->note}};
  }
  return j.dump(2);
}

namespace {

std::vector<int> free_nodes_of(int n, const InputSet& pins) {
  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (!pins.contains(v)) free.push_back(v);
  return free;
}

State base_state(int n, const InputSet& pins) {
  State s(n);
  pins.apply(s);
  return s;
}

// free[0] is the most significant position so that enumeration order is
// lexicographic on the free bits
State with_free_bits(State base, const std::vector<int>& free, uint64_t mask) {
  int f = static_cast<int>(free.size());
  for (int k = 0; k < f; ++k)
    if ((mask >> (f - 1 - k)) & 1ULL) base.set(free[k], true);
  return base;
}

struct TrajectoryOutcome {
  bool cycle_found = false;
  Attractor cycle;
  int steps = 0;
};

TrajectoryOutcome pinned_cycle(const RegulatoryNetwork& net, const State& initial,
                               const InputSet& pins, int horizon) {
  std::unordered_map<State, int, StateHash> seen;
  std::vector<State> trajectory;
  State current = initial;
  TrajectoryOutcome out;
  for (int t = 0; t <= horizon; ++t) {
    auto [it, inserted] = seen.emplace(current, t);
    if (!inserted) {
      out.cycle_found = true;
      out.steps = t;
      out.cycle.states.assign(trajectory.begin() + it->second, trajectory.end());
      return out;
    }
    trajectory.push_back(current);
    current = step_synchronous(net, current, pins);
  }
  out.steps = horizon;
  return out;
}

}  // namespace

VerificationReport verify_exhaustive(const RegulatoryNetwork& net, const Attractor& target,
                                     const InputSet& pins, const VerifyOptions& opts) {
  std::vector<int> free = opts.from_all_states ? free_nodes_of(net.n, {})
                                               : free_nodes_of(net.n, pins);
  int f = static_cast<int>(free.size());
  if (f > opts.free_limit)
    raise(errc::too_large, "too many free nodes for exhaustive verification");
  long long horizon = opts.horizon > 0
                          ? opts.horizon
                          : (1LL << std::min<int>(f, 40)) + target.length() + 2;

  VerificationReport report;
  report.mode = VerificationReport::Mode::exhaustive;
  State base = base_state(net.n, pins);
  if (opts.from_all_states) base = State(net.n);
  for (uint64_t mask = 0; mask < (1ULL << f); ++mask) {
    State initial = with_free_bits(base, free, mask);
    ++report.trials;
    // a disagreeing start is overwritten by the pins at its first step
    State entry = initial;
    int lead = 0;
    if (!pins.agrees(entry)) {
      entry = step_synchronous(net, initial, pins);
      lead = 1;
    }
    TrajectoryOutcome out = pinned_cycle(net, entry, pins, static_cast<int>(horizon));
    report.max_steps_observed = std::max(report.max_steps_observed, out.steps + lead);
    bool ok = out.cycle_found && same_up_to_rotation(out.cycle, target);
    if (ok) {
      ++report.converged;
    } else if (!report.counterexample) {
      report.counterexample = Counterexample{initial, -1, "synchronous, exhaustive"};
    }
  }
  return report;
}

VerificationReport verify_monte_carlo(const RegulatoryNetwork& net, const Attractor& target,
                                      const InputSet& pins, Schedule schedule, long long trials,
                                      uint64_t seed, int horizon) {
  if (trials < 1) raise(errc::invalid_argument, "at least one trial is required");
  if (target.length() != 1 && schedule != Schedule::synchronous)
    raise(errc::invalid_argument,
          "asynchronous and stochastic verification target fixed points only");
  if ((schedule == Schedule::async_uniform || schedule == Schedule::async_round_robin ||
       schedule == Schedule::synchronous) &&
      !net.deterministic())
    raise(errc::invalid_argument,
          "this schedule updates with the plain rules; merge or use the stochastic schedule");
  if (horizon <= 0) horizon = 64 * std::max(net.n, 1);
  int alternatives = net.alternative_count();

  VerificationReport report;
  report.mode = VerificationReport::Mode::monte_carlo;
  std::vector<int> free = free_nodes_of(net.n, pins);
  State base = base_state(net.n, pins);
  Rng master(seed);

  for (long long t = 0; t < trials; ++t) {
    Rng rng = master.fork(static_cast<uint64_t>(t));
    State initial = base;
    for (int v : free) initial.set(v, rng.next() & 1ULL);
    ++report.trials;

    bool ok = false;
    int steps = 0;
    if (schedule == Schedule::synchronous) {
      TrajectoryOutcome out = pinned_cycle(net, initial, pins, horizon);
      ok = out.cycle_found && same_up_to_rotation(out.cycle, target);
      steps = out.steps;
    } else {
      const State& goal = target.states[0];
      State current = initial;
      for (steps = 0; steps <= horizon; ++steps) {
        if (current == goal) {
          ok = true;
          break;
        }
        switch (schedule) {
          case Schedule::async_uniform:
            current = step_asynchronous(net, current, pins, rng.below_int(net.n));
            break;
          case Schedule::async_round_robin:
            current = step_asynchronous(net, current, pins, static_cast<int>(steps % net.n));
            break;
          case Schedule::stochastic_uniform:
            current = step_stochastic(net, current, pins, rng.below_int(alternatives));
            break;
          default:
            break;
        }
      }
    }
    report.max_steps_observed = std::max(report.max_steps_observed, steps);
    if (ok) {
      ++report.converged;
    } else if (!report.counterexample) {
      report.counterexample =
          Counterexample{initial, t, schedule_name(schedule) + ", monte-carlo"};
    }
  }
  return report;
}

namespace {

struct PhasedKey {
  State state;
  int phase;
  bool operator==(const PhasedKey&) const = default;
};

struct PhasedHash {
  size_t operator()(const PhasedKey& k) const {
    return static_cast<size_t>(k.state.hash() * 1000003ULL + static_cast<uint64_t>(k.phase));
  }
};

}  // namespace

VerificationReport verify_cyclic(const RegulatoryNetwork& net, const Attractor& attractor,
                                 const std::vector<int>& genes, const CyclicVerifyOptions& opts) {
  int p = attractor.length();
  if (p < 1) raise(errc::invalid_attractor, "empty attractor");
  std::vector<InputSet> phase_pins(p);
  for (int a = 0; a < p; ++a) phase_pins[a] = InputSet::from_target(genes, attractor.states[a]);

  std::vector<int> free = free_nodes_of(net.n, phase_pins[0]);
  int f = static_cast<int>(free.size());
  bool exhaustive = opts.exhaustive && f <= opts.free_limit;
  long long horizon =
      opts.horizon > 0 ? opts.horizon
                       : (exhaustive ? ((1LL << std::min(f, 24)) + 1) * p : 64LL * net.n);

  auto run_one = [&](const State& initial) -> std::pair<bool, int> {
    std::unordered_map<PhasedKey, int, PhasedHash> seen;
    std::vector<State> trajectory;
    State current = initial;
    for (int t = 0; t <= horizon; ++t) {
      PhasedKey key{current, t % p};
      auto [it, inserted] = seen.emplace(key, t);
      if (!inserted) {
        Attractor cycle;
        cycle.states.assign(trajectory.begin() + it->second, trajectory.end());
        return {same_up_to_rotation(cycle, attractor), t};
      }
      trajectory.push_back(current);
      current = step_synchronous(net, current, phase_pins[(t + 1) % p]);
    }
    return {false, static_cast<int>(horizon)};
  };

  VerificationReport report;
  State base = base_state(net.n, phase_pins[0]);
  if (exhaustive) {
    report.mode = VerificationReport::Mode::exhaustive;
    for (uint64_t mask = 0; mask < (1ULL << f); ++mask) {
      State initial = with_free_bits(base, free, mask);
      ++report.trials;
      auto [ok, steps] = run_one(initial);
      report.max_steps_observed = std::max(report.max_steps_observed, steps);
      if (ok)
        ++report.converged;
      else if (!report.counterexample)
        report.counterexample = Counterexample{initial, -1, "cyclic replay, exhaustive"};
    }
  } else {
    report.mode = VerificationReport::Mode::monte_carlo;
    Rng master(opts.seed);
    for (long long t = 0; t < opts.trials; ++t) {
      Rng rng = master.fork(static_cast<uint64_t>(t));
      State initial = base;
      for (int v : free) initial.set(v, rng.next() & 1ULL);
      ++report.trials;
      auto [ok, steps] = run_one(initial);
      report.max_steps_observed = std::max(report.max_steps_observed, steps);
      if (ok)
        ++report.converged;
      else if (!report.counterexample)
        report.counterexample = Counterexample{initial, t, "cyclic replay, monte-carlo"};
    }
  }
  return report;
}

}  // namespace bnc
