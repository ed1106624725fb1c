// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace bnc;

namespace {

// x1' = x2, x2' = x1
RegulatoryNetwork mutual_copy() {
  std::vector<UpdateRule> rules;
  rules.push_back(TruthTableRule{{1}, {0, 1}});
  rules.push_back(TruthTableRule{{0}, {0, 1}});
  return RegulatoryNetwork::from_rules(std::move(rules));
}

// x1' = !x1
RegulatoryNetwork negation_loop() {
  std::vector<UpdateRule> rules;
  rules.push_back(TruthTableRule{{0}, {1, 0}});
  return RegulatoryNetwork::from_rules(std::move(rules));
}

// f1 = x1, f2 = x2, f3 = x1 | x2
RegulatoryNetwork net_a() {
  std::vector<UpdateRule> rules;
  rules.push_back(TruthTableRule{{0}, {0, 1}});
  rules.push_back(TruthTableRule{{1}, {0, 1}});
  rules.push_back(TruthTableRule{{0, 1}, {0, 1, 1, 1}});
  return RegulatoryNetwork::from_rules(std::move(rules));
}

}  // namespace

TEST_CASE("threshold rule fires at its boundary") {
  ThresholdRule rule{{{0, 1.0}, {1, 1.0}}, 1.0};
  State s = State::from_string("10");
  CHECK(evaluate_rule(UpdateRule{rule}, s));
  s = State::from_string("00");
  CHECK_FALSE(evaluate_rule(UpdateRule{rule}, s));
}

TEST_CASE("nested canalyzing rule follows the first matching rank") {
  // order (j1, j2) = (0, 1), b = (1, 1), a = (1, 0), default 0
  NestedCanalyzingRule rule{{0, 1}, {1, 1}, {1, 0}, 0};
  CHECK_FALSE(evaluate_rule(UpdateRule{rule}, State::from_string("01")));  // rank 2 fires, a2 = 0
  CHECK(evaluate_rule(UpdateRule{rule}, State::from_string("10")));        // rank 1 fires
  CHECK_FALSE(evaluate_rule(UpdateRule{rule}, State::from_string("00")));  // default
}

TEST_CASE("truth table lookup uses the first input as the high bit") {
  TruthTableRule rule{{0, 1}, {0, 1, 1, 0}};  // XOR
  CHECK_FALSE(evaluate_rule(UpdateRule{rule}, State::from_string("11")));
  CHECK(evaluate_rule(UpdateRule{rule}, State::from_string("10")));
}

TEST_CASE("rule set alternatives") {
  RuleSet set;
  set.alternatives.push_back(ThresholdRule{{{0, 1.0}}, 1.0});
  set.alternatives.push_back(ThresholdRule{{{0, 1.0}}, 2.0});
  State s = State::from_string("1");
  CHECK(evaluate_rule(UpdateRule{set}, s, 0));
  CHECK_FALSE(evaluate_rule(UpdateRule{set}, s, 1));
  CHECK_THROWS_AS((void)evaluate_rule(UpdateRule{set}, s, 5), Error);
  CHECK_THROWS_AS((void)evaluate_rule(UpdateRule{set}, s), Error);
}

TEST_CASE("synchronous step with and without pins") {
  RegulatoryNetwork net = mutual_copy();
  CHECK(step_synchronous(net, State::from_string("01")) == State::from_string("10"));

  InputSet pins;
  pins.add(0, true);
  CHECK(step_synchronous(net, State::from_string("10"), pins) == State::from_string("11"));

  RegulatoryNetwork neg = negation_loop();
  CHECK(step_synchronous(neg, State::from_string("0")) == State::from_string("1"));
}

TEST_CASE("simulate_pinned walks a path and respects its precondition") {
  // 1 -> 2 -> 3 copy chain
  std::vector<UpdateRule> rules;
  rules.push_back(TruthTableRule{{0}, {0, 1}});
  rules.push_back(TruthTableRule{{0}, {0, 1}});
  rules.push_back(TruthTableRule{{1}, {0, 1}});
  RegulatoryNetwork chain = RegulatoryNetwork::from_rules(std::move(rules));

  InputSet pins;
  pins.add(0, true);
  SimulationResult result = simulate_pinned(chain, State::from_string("100"), pins, 64);
  CHECK(result.cycle_found);
  CHECK(result.final == State::from_string("111"));

  CHECK_THROWS_AS(simulate_pinned(chain, State::from_string("000"), pins, 64), Error);
}

TEST_CASE("simulate_pinned reports pure cycles") {
  RegulatoryNetwork neg = negation_loop();
  SimulationResult result = simulate_pinned(neg, State::from_string("0"), {}, 64);
  CHECK(result.cycle_found);
  CHECK(result.cycle.length() == 2);
}

TEST_CASE("net A converges to all-ones when both sources are pinned") {
  RegulatoryNetwork net = net_a();
  InputSet pins;
  pins.add(0, true);
  pins.add(1, true);
  // both free initial states of node 3
  for (const char* start : {"110", "111"}) {
    SimulationResult result = simulate_pinned(net, State::from_string(start), pins, 16);
    CHECK(result.final == State::from_string("111"));
  }
}

TEST_CASE("fixed points of small nets") {
  RegulatoryNetwork net = mutual_copy();
  std::vector<State> points = find_fixed_points(net);
  REQUIRE(points.size() == 2);
  CHECK(points[0] == State::from_string("00"));
  CHECK(points[1] == State::from_string("11"));

  CHECK(find_fixed_points(negation_loop()).empty());
}

TEST_CASE("all-excitatory threshold net with zero thresholds keeps all-ones") {
  Rng rng(7);
  std::vector<UpdateRule> rules;
  for (int i = 0; i < 5; ++i) {
    ThresholdRule rule;
    for (int j = 0; j < 5; ++j)
      if (rng.bernoulli(0.5)) rule.weights.push_back({j, 1.0});
    rule.tau = 0.0;
    rules.push_back(rule);
  }
  RegulatoryNetwork net = RegulatoryNetwork::from_rules(std::move(rules));
  std::vector<State> points = find_fixed_points(net);
  bool has_ones = false;
  for (const State& s : points)
    if (s == State(5, true)) has_ones = true;
  CHECK(has_ones);
}

TEST_CASE("rule evaluation rejects out-of-range references") {
  TruthTableRule rule{{5}, {0, 1}};
  CHECK_THROWS_AS((void)evaluate_rule(UpdateRule{rule}, State::from_string("01")), Error);
}

TEST_CASE("oversized non-threshold networks exceed the search bound") {
  std::vector<UpdateRule> rules;
  for (int i = 0; i < 23; ++i) rules.push_back(TruthTableRule{{i}, {0, 1}});
  RegulatoryNetwork net = RegulatoryNetwork::from_rules(std::move(rules));
  CHECK_THROWS_AS((void)find_fixed_points(net), Error);
}

TEST_CASE("threshold backtracking equals exhaustive enumeration") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    int n = 4 + rng.below_int(9);  // up to 12
    RegulatoryNetwork net = testutil::random_signed_threshold_net(rng, n, 0.3);
    std::vector<State> via_search = find_fixed_points(net);
    std::vector<State> via_brute = testutil::brute_fixed_points(net);
    REQUIRE(via_search.size() == via_brute.size());
    for (size_t i = 0; i < via_search.size(); ++i) CHECK(via_search[i] == via_brute[i]);
  }
}

TEST_CASE("attractor discovery") {
  CHECK(find_attractor_from(negation_loop(), State::from_string("0")).length() == 2);
  Attractor fp = find_attractor_from(mutual_copy(), State::from_string("11"));
  REQUIRE(fp.length() == 1);
  CHECK(fp.states[0] == State::from_string("11"));
}

TEST_CASE("a 3-bit counter cycles through all eight states") {
  // x1x2x3 + 1 mod 8, x1 the high bit
  std::vector<int> all{0, 1, 2};
  auto table_for = [&](int bit) {
    std::vector<uint8_t> table(8);
    for (int v = 0; v < 8; ++v) {
      int next = (v + 1) % 8;
      table[v] = (next >> (2 - bit)) & 1;
    }
    return table;
  };
  std::vector<UpdateRule> rules;
  for (int bit = 0; bit < 3; ++bit) rules.push_back(TruthTableRule{all, table_for(bit)});
  RegulatoryNetwork counter = RegulatoryNetwork::from_rules(std::move(rules));
  Attractor cycle = find_attractor_from(counter, State::from_string("000"));
  CHECK(cycle.length() == 8);
  CHECK(attractor_valid(counter, cycle));
}

TEST_CASE("asynchronous steps update one node") {
  RegulatoryNetwork net = mutual_copy();
  State s = State::from_string("01");
  CHECK(step_asynchronous(net, s, {}, 0) == State::from_string("11"));
  CHECK(step_asynchronous(net, s, {}, 1) == State::from_string("00"));

  InputSet pins;
  pins.add(0, false);
  CHECK(step_asynchronous(net, s, pins, 0) == s);
}

TEST_CASE("stochastic steps select the alternative") {
  RuleSet choice;
  choice.alternatives.push_back(TruthTableRule{{1}, {0, 1}});  // copy x2
  choice.alternatives.push_back(TruthTableRule{{}, {1}});      // constant 1
  std::vector<UpdateRule> rules;
  rules.push_back(choice);
  rules.push_back(TruthTableRule{{1}, {0, 1}});  // self copy
  RegulatoryNetwork net = RegulatoryNetwork::from_rules(std::move(rules));

  State s = State::from_string("00");
  CHECK(step_stochastic(net, s, {}, 0) == State::from_string("00"));
  CHECK(step_stochastic(net, s, {}, 1) == State::from_string("10"));

  // threshold alternatives: one active in-neighbor
  RuleSet taus;
  taus.alternatives.push_back(ThresholdRule{{{1, 1.0}}, 1.0});
  taus.alternatives.push_back(ThresholdRule{{{1, 1.0}}, 2.0});
  std::vector<UpdateRule> rules2;
  rules2.push_back(taus);
  rules2.push_back(TruthTableRule{{1}, {0, 1}});
  RegulatoryNetwork net2 = RegulatoryNetwork::from_rules(std::move(rules2));
  State t = State::from_string("01");
  CHECK(step_stochastic(net2, t, {}, 0).get(0));
  CHECK_FALSE(step_stochastic(net2, t, {}, 1).get(0));
}

TEST_CASE("synchronous stepping is deterministic and pure") {
  Rng rng(11);
  RegulatoryNetwork net = testutil::random_table_net(rng, 6, 3);
  State s(6);
  for (int i = 0; i < 6; ++i) s.set(i, rng.next() & 1ULL);
  State a = step_synchronous(net, s);
  State b = step_synchronous(net, s);
  CHECK(a == b);
}

TEST_CASE("returned attractors are closed under stepping") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    RegulatoryNetwork net = testutil::random_table_net(rng, 5, 3);
    State start(5);
    for (int i = 0; i < 5; ++i) start.set(i, rng.next() & 1ULL);
    Attractor a = find_attractor_from(net, start);
    CHECK(attractor_valid(net, a));
  }
}

TEST_CASE("fixed points absorb pinned steps") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    RegulatoryNetwork net = testutil::random_table_net(rng, 5, 3);
    for (const State& x : find_fixed_points(net)) {
      std::vector<int> some_nodes{0, 2};
      InputSet pins = InputSet::from_target(some_nodes, x);
      CHECK(step_synchronous(net, x, pins) == x);
    }
  }
}
