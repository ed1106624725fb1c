// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace bnc {

namespace {

void check_fixed_point(const RegulatoryNetwork& net, const State& x_star) {
  if (x_star.size() != net.n)
    raise(errc::dimension_mismatch, "attractor state size differs from node count");
  if (step_synchronous(net, x_star) != x_star)
    raise(errc::not_a_fixed_point, "the requested state is not a fixed point");
}

void sort_edges(TssInstance& inst) {
  for (auto& ins : inst.in_edges) std::sort(ins.begin(), ins.end());
}

// Threshold rule of a node, looking through single-alternative rule sets.
const ThresholdRule* threshold_rule_of(const RegulatoryNetwork& net, int i) {
  const ThresholdRule* rule = std::get_if<ThresholdRule>(&net.rules[i]);
  if (rule == nullptr) {
    if (const auto* set = std::get_if<RuleSet>(&net.rules[i]);
        set != nullptr && set->alternatives.size() == 1)
      rule = std::get_if<ThresholdRule>(&set->alternatives[0]);
  }
  return rule;
}

}  // namespace

TssInstance build_augmented(const RegulatoryNetwork& net, const State& x_star) {
  check_fixed_point(net, x_star);

  std::vector<CnfForm> cnfs;
  cnfs.reserve(net.n);
  for (const auto& rule : net.rules) cnfs.push_back(rule_to_cnf(rule));

  TssInstance inst;
  inst.m = net.n;
  for (const auto& cnf : cnfs) inst.m += static_cast<int>(cnf.clauses.size());
  inst.in_edges.resize(inst.m);
  inst.tau.resize(inst.m);
  inst.provenance.resize(inst.m);

  for (int i = 0; i < net.n; ++i) {
    inst.provenance[i] = Provenance::original(i);
    int l_i = static_cast<int>(cnfs[i].clauses.size());
    inst.tau[i] = x_star.get(i) ? l_i : 1;
  }

  int aux = net.n;
  for (int i = 0; i < net.n; ++i) {
    bool on = x_star.get(i);
    for (int s = 0; s < static_cast<int>(cnfs[i].clauses.size()); ++s, ++aux) {
      const auto& clause = cnfs[i].clauses[s];
      inst.provenance[aux] = Provenance::auxiliary(i, s);
      inst.tau[aux] = on ? 1 : static_cast<int>(clause.size());
      inst.in_edges[i].push_back(aux);
      for (const Literal& lit : clause) {
        bool match = lit.negated ? (x_star.get(lit.node) != on) : (x_star.get(lit.node) == on);
        if (match) inst.in_edges[aux].push_back(lit.node);
      }
    }
  }
  sort_edges(inst);
  inst.validate();
  return inst;
}

SignedThresholdNet classify_signed(const RegulatoryNetwork& net, const State& x_star) {
  if (x_star.size() != net.n)
    raise(errc::dimension_mismatch, "attractor state size differs from node count");
  // sign of node j = sign of j's weight in every rule that references it
  std::vector<int> sign(net.n, 0);  // 0 unknown, +1 excitatory, -1 inhibitory
  for (int i = 0; i < net.n; ++i) {
    const ThresholdRule* rule = threshold_rule_of(net, i);
    if (rule == nullptr)
      raise(errc::invalid_argument, "signed classification requires threshold rules");
    for (const auto& [j, w] : rule->weights) {
      if (w != 1.0 && w != -1.0)
        raise(errc::mixed_sign_node,
              "node " + net.name(j) + " has a non-unit weight toward " + net.name(i));
      int s = w > 0 ? 1 : -1;
      if (sign[j] == 0)
        sign[j] = s;
      else if (sign[j] != s)
        raise(errc::mixed_sign_node,
              "node " + net.name(j) + " is neither purely excitatory nor purely inhibitory");
    }
  }
  SignedThresholdNet out;
  out.excitatory.resize(net.n);
  for (int v = 0; v < net.n; ++v) {
    out.excitatory[v] = sign[v] >= 0;  // nodes without out-edges default to excitatory
    bool on = x_star.get(v);
    if (out.excitatory[v])
      (on ? out.e1 : out.e0).push_back(v);
    else
      (on ? out.i1 : out.i0).push_back(v);
  }
  return out;
}

TssInstance build_threshold_tss(const RegulatoryNetwork& net, const State& x_star,
                                SignedThresholdNet* out_classes) {
  SignedThresholdNet classes = classify_signed(net, x_star);
  check_fixed_point(net, x_star);

  TssInstance inst;
  inst.m = net.n;
  inst.in_edges.resize(net.n);
  inst.tau.resize(net.n);
  inst.provenance.resize(net.n);
  for (int i = 0; i < net.n; ++i) {
    inst.provenance[i] = Provenance::original(i);
    const ThresholdRule& rule = *threshold_rule_of(net, i);
    int shifted = 0;
    for (NodeId j : net.in_edges[i]) {
      bool exc = classes.excitatory[j];
      if (x_star.get(i) ? !exc : exc) ++shifted;
      bool keep = exc ? x_star.get(j) == x_star.get(i) : x_star.get(j) != x_star.get(i);
      if (keep) inst.in_edges[i].push_back(j);
    }
    int base = static_cast<int>(std::ceil(rule.tau));
    if (!x_star.get(i)) {
      // an off-node must keep its sum strictly below tau; the helper count
      // that guarantees that is one higher whenever tau <= 0
      double below = std::ceil(rule.tau) == rule.tau ? rule.tau - 1.0 : std::floor(rule.tau);
      base = std::max(base, -static_cast<int>(below));
    }
    inst.tau[i] = base + shifted;
  }
  sort_edges(inst);
  inst.validate();
  if (out_classes) *out_classes = classes;
  return inst;
}

namespace {

const NestedCanalyzingRule& nc_rule(const RegulatoryNetwork& net, int i) {
  const auto* rule = std::get_if<NestedCanalyzingRule>(&net.rules[i]);
  if (rule == nullptr)
    raise(errc::invalid_argument,
          "node " + net.name(i) + " does not carry a nested canalyzing rule");
  return *rule;
}

}  // namespace

TssInstance build_nc_full(const RegulatoryNetwork& net, const State& x_star) {
  check_fixed_point(net, x_star);

  struct Aux {
    int owner;
    int rank;  // trigger rank, also the provenance clause index
    std::vector<int> sources;
  };
  std::vector<Aux> auxes;
  for (int i = 0; i < net.n; ++i) {
    const auto& rule = nc_rule(net, i);
    bool on = x_star.get(i);
    int d = static_cast<int>(rule.order.size());
    std::vector<int> off_ranks;  // earlier ranks whose canalyzed value is wrong
    for (int s = 0; s < d; ++s) {
      bool in_omega = (rule.canalyzed[s] != 0) == on;
      if (in_omega) {
        // the rank only certifies the fixed point when its condition holds
        // there: trigger matches and every earlier off-rank is held off
        bool consistent = x_star.get(rule.order[s]) == (rule.canalyzing[s] != 0);
        for (int r : off_ranks)
          if (x_star.get(rule.order[r]) == (rule.canalyzing[r] != 0)) consistent = false;
        if (consistent) {
          Aux aux{i, s, {}};
          for (int r : off_ranks) aux.sources.push_back(rule.order[r]);
          aux.sources.push_back(rule.order[s]);
          std::sort(aux.sources.begin(), aux.sources.end());
          aux.sources.erase(std::unique(aux.sources.begin(), aux.sources.end()),
                            aux.sources.end());
          auxes.push_back(std::move(aux));
        }
      } else {
        off_ranks.push_back(s);
      }
    }
  }

  TssInstance inst;
  inst.m = net.n + static_cast<int>(auxes.size());
  inst.in_edges.resize(inst.m);
  inst.tau.resize(inst.m);
  inst.provenance.resize(inst.m);
  for (int i = 0; i < net.n; ++i) {
    inst.provenance[i] = Provenance::original(i);
    inst.tau[i] = 1;
  }
  for (size_t a = 0; a < auxes.size(); ++a) {
    int v = net.n + static_cast<int>(a);
    inst.provenance[v] = Provenance::auxiliary(auxes[a].owner, auxes[a].rank);
    inst.in_edges[v] = auxes[a].sources;
    inst.tau[v] = static_cast<int>(auxes[a].sources.size());
    inst.in_edges[auxes[a].owner].push_back(v);
  }
  sort_edges(inst);
  inst.validate();
  return inst;
}

TssInstance build_nc_unanimous(const RegulatoryNetwork& net, const State& x_star) {
  check_fixed_point(net, x_star);

  TssInstance inst;
  inst.m = net.n;
  inst.in_edges.resize(net.n);
  inst.tau.resize(net.n);
  inst.provenance.resize(net.n);
  for (int i = 0; i < net.n; ++i) {
    inst.provenance[i] = Provenance::original(i);
    const auto& rule = nc_rule(net, i);
    int d = static_cast<int>(rule.order.size());
    if (d == 0) {
      inst.tau[i] = 0;  // constant rule, self-activating
      continue;
    }
    int star_rank = -1;
    for (int s = 0; s < d; ++s)
      if (x_star.get(rule.order[s]) == (rule.canalyzing[s] != 0)) {
        star_rank = s;
        break;
      }
    if (star_rank < 0)
      raise(errc::no_canalyzing_rank,
            "no rank of node " + net.name(i) + " fires at the fixed point");
    // fixed-pointness makes the deciding rank produce the node's own value
    if ((rule.canalyzed[star_rank] != 0) != x_star.get(i))
      raise(errc::not_a_fixed_point, "inconsistent deciding rank for node " + net.name(i));
    for (int s = 0; s <= star_rank; ++s) inst.in_edges[i].push_back(rule.order[s]);
    std::sort(inst.in_edges[i].begin(), inst.in_edges[i].end());
    inst.in_edges[i].erase(std::unique(inst.in_edges[i].begin(), inst.in_edges[i].end()),
                           inst.in_edges[i].end());
    inst.tau[i] = static_cast<int>(inst.in_edges[i].size());
  }
  inst.validate();
  return inst;
}

TssInstance build_cyclic(const RegulatoryNetwork& net, const Attractor& attractor) {
  int p = attractor.length();
  if (p < 2) raise(errc::invalid_attractor, "cyclic construction needs at least two states");
  if (!attractor_valid(net, attractor))
    raise(errc::invalid_attractor, "not a valid attractor of the network");

  std::vector<CnfForm> cnfs;
  cnfs.reserve(net.n);
  int aux_per_copy = 0;
  for (const auto& rule : net.rules) {
    cnfs.push_back(rule_to_cnf(rule));
    aux_per_copy += static_cast<int>(cnfs.back().clauses.size());
  }
  int stride = net.n + aux_per_copy;

  TssInstance inst;
  inst.m = stride * p;
  inst.in_edges.resize(inst.m);
  inst.tau.resize(inst.m);
  inst.provenance.resize(inst.m);

  for (int a = 0; a < p; ++a) {
    const State& here = attractor.states[a];
    const State& prev = attractor.states[(a + p - 1) % p];
    int base = a * stride;
    int aux = base + net.n;
    for (int i = 0; i < net.n; ++i) {
      bool on = here.get(i);
      inst.provenance[base + i] = Provenance::original(i);
      inst.tau[base + i] = on ? static_cast<int>(cnfs[i].clauses.size()) : 1;
      for (int s = 0; s < static_cast<int>(cnfs[i].clauses.size()); ++s, ++aux) {
        const auto& clause = cnfs[i].clauses[s];
        inst.provenance[aux] = Provenance::auxiliary(i, a * 65536 + s);
        inst.tau[aux] = on ? 1 : static_cast<int>(clause.size());
        inst.in_edges[base + i].push_back(aux);
        int prev_base = ((a + p - 1) % p) * stride;
        for (const Literal& lit : clause) {
          bool match = lit.negated ? (prev.get(lit.node) != on) : (prev.get(lit.node) == on);
          if (match) inst.in_edges[aux].push_back(prev_base + lit.node);
        }
      }
    }
  }
  sort_edges(inst);
  inst.validate();
  return inst;
}

namespace {

std::vector<BasicRule> alternatives_of(const UpdateRule& rule) {
  if (const auto* set = std::get_if<RuleSet>(&rule)) {
    if (set->alternatives.empty()) raise(errc::invalid_argument, "empty rule set");
    return set->alternatives;
  }
  return {std::visit(
      [](const auto& r) -> BasicRule {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, RuleSet>)
          raise(errc::invalid_argument, "unexpected rule set");
        else
          return BasicRule{r};
      },
      rule)};
}

bool eval_alt(const BasicRule& rule, const State& state) {
  UpdateRule wrapped = std::visit([](const auto& r) { return UpdateRule{r}; }, rule);
  return evaluate_rule(wrapped, state);
}

}  // namespace

RegulatoryNetwork merge_rules(const RegulatoryNetwork& net, const State& x_star) {
  if (x_star.size() != net.n)
    raise(errc::dimension_mismatch, "attractor state size differs from node count");

  std::vector<std::vector<BasicRule>> alts(net.n);
  for (int i = 0; i < net.n; ++i) {
    alts[i] = alternatives_of(net.rules[i]);
    for (const auto& alt : alts[i])
      if (eval_alt(alt, x_star) != x_star.get(i))
        raise(errc::attractor_not_common_fixed_point,
              "state is not fixed under every alternative of node " + net.name(i));
  }

  std::vector<UpdateRule> merged(net.n);
  for (int i = 0; i < net.n; ++i) {
    bool on = x_star.get(i);

    // a single alternative has no uncertainty to merge over
    if (alts[i].size() == 1) {
      merged[i] = std::visit([](const auto& r) { return UpdateRule{r}; }, alts[i][0]);
      continue;
    }

    // same-weight threshold alternatives without a self-loop merge exactly
    // into one threshold rule: max tau for on-nodes, min tau for off-nodes
    bool thresholds = true;
    const ThresholdRule* first = std::get_if<ThresholdRule>(&alts[i][0]);
    for (const auto& alt : alts[i]) {
      const ThresholdRule* rule = std::get_if<ThresholdRule>(&alt);
      if (rule == nullptr || first == nullptr || rule->weights != first->weights ||
          rule->weights.end() != std::find_if(rule->weights.begin(), rule->weights.end(),
                                              [i](const auto& w) { return w.first == i; })) {
        thresholds = false;
        break;
      }
    }
    if (thresholds) {
      double tau = first->tau;
      for (const auto& alt : alts[i]) {
        double t = std::get<ThresholdRule>(alt).tau;
        tau = on ? std::max(tau, t) : std::min(tau, t);
      }
      merged[i] = ThresholdRule{first->weights, tau};
      continue;
    }

    // general case: evaluate the conservative combination over the union
    // support and store it as a truth table
    std::vector<NodeId> support;
    for (const auto& alt : alts[i])
      for (NodeId j : rule_support(alt)) support.push_back(j);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    int d = static_cast<int>(support.size());
    if (d > 16) raise(errc::fan_in_too_large, "merged support exceeds the expansion bound");

    int top = net.n;
    State probe(top);
    std::vector<uint8_t> table(size_t{1} << d);
    for (uint32_t idx = 0; idx < table.size(); ++idx) {
      for (int k = 0; k < d; ++k) probe.set(support[k], (idx >> (d - 1 - k)) & 1u);
      State pinned = probe;
      pinned.set(i, on);
      bool any_raw = false, all_raw = true, any_pin = false, all_pin = true;
      for (const auto& alt : alts[i]) {
        bool raw = eval_alt(alt, probe);
        bool pin = eval_alt(alt, pinned);
        any_raw |= raw;
        all_raw &= raw;
        any_pin |= pin;
        all_pin &= pin;
      }
      bool value = on ? (any_raw && all_pin) : (all_raw || any_pin);
      table[idx] = value ? 1 : 0;
    }
    merged[i] = TruthTableRule{support, std::move(table)};
  }
  return RegulatoryNetwork::from_rules(std::move(merged), net.names);
}

TssInstance merge_probabilistic(const RegulatoryNetwork& net, const State& x_star,
                                MergeRoute route, SignedThresholdNet* out_classes) {
  RegulatoryNetwork merged = merge_rules(net, x_star);
  if (route == MergeRoute::threshold) return build_threshold_tss(merged, x_star, out_classes);
  return build_augmented(merged, x_star);
}

namespace {

bool induced_acyclic(int n, const std::vector<std::vector<int>>& in_edges,
                     const std::vector<uint8_t>& removed) {
  // Kahn's algorithm on the kept nodes; self-loops keep their node unready
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> out(n);
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    for (int j : in_edges[v]) {
      if (removed[j]) continue;
      ++degree[v];
      out[j].push_back(v);
    }
  }
  std::vector<int> ready;
  int kept = 0;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    ++kept;
    if (degree[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--degree[w] == 0) ready.push_back(w);
  }
  return seen == kept;
}

}  // namespace

bool baseline_implies_target(const RegulatoryNetwork& net, const std::vector<int>& S) {
  std::vector<uint8_t> in_s(net.n, 0);
  for (int v : S) {
    if (v < 0 || v >= net.n) raise(errc::index_out_of_range, "set member out of range");
    in_s[v] = 1;
  }
  if (!induced_acyclic(net.n, net.in_edges, in_s)) return false;

  // undirected connectivity to the set
  std::vector<int> parent(net.n);
  for (int v = 0; v < net.n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int v = 0; v < net.n; ++v)
    for (int j : net.in_edges[v]) parent[find(j)] = find(v);
  std::vector<uint8_t> component_hit(net.n, 0);
  for (int v : S) component_hit[find(v)] = 1;
  for (int v = 0; v < net.n; ++v)
    if (!component_hit[find(v)]) return false;
  return true;
}

std::vector<int> target_genes(const TssInstance& inst, const std::vector<int>& members) {
  std::vector<int> genes;
  for (int v : members) {
    if (v < 0 || v >= inst.m) raise(errc::index_out_of_range, "member out of range");
    genes.push_back(inst.provenance[v].owner);
  }
  std::sort(genes.begin(), genes.end());
  genes.erase(std::unique(genes.begin(), genes.end()), genes.end());
  return genes;
}

std::vector<int> gene_seed_nodes(const TssInstance& inst, const std::vector<int>& genes) {
  std::vector<int> out;
  for (int v = 0; v < inst.m; ++v)
    if (inst.provenance[v].kind == Provenance::Kind::original &&
        std::binary_search(genes.begin(), genes.end(), inst.provenance[v].owner))
      out.push_back(v);
  return out;
}

}  // namespace bnc
