// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/cnf.hpp"

#include <algorithm>
#include <unordered_set>

namespace bnc {

namespace {

constexpr int kMaxFanIn = 16;

// Implicant of the complement function: variables in `mask` are fixed to the
// bits of `value`.
struct Implicant {
  uint32_t mask = 0;
  uint32_t value = 0;
  bool operator==(const Implicant&) const = default;
};

uint64_t key_of(const Implicant& imp) {
  return (static_cast<uint64_t>(imp.mask) << 32) | imp.value;
}

// All prime implicants of the function given by `ones` (indices with output
// 1) over `d` variables, via level-by-level adjacency merging.
std::vector<Implicant> prime_implicants(const std::vector<uint32_t>& ones, int d) {
  uint32_t full = d == 32 ? ~0u : ((1u << d) - 1);
  std::vector<Implicant> level;
  level.reserve(ones.size());
  for (uint32_t v : ones) level.push_back({full, v});

  std::vector<Implicant> primes;
  while (!level.empty()) {
    std::unordered_set<uint64_t> present;
    present.reserve(level.size() * 2);
    for (const auto& imp : level) present.insert(key_of(imp));

    std::vector<uint8_t> merged(level.size(), 0);
    std::vector<Implicant> next;
    std::unordered_set<uint64_t> next_seen;
    for (size_t i = 0; i < level.size(); ++i) {
      const Implicant& imp = level[i];
      for (int b = 0; b < d; ++b) {
        uint32_t bit = 1u << b;
        if (!(imp.mask & bit)) continue;
        Implicant partner{imp.mask, imp.value ^ bit};
        if (!present.count(key_of(partner))) continue;
        merged[i] = 1;
        Implicant combined{imp.mask & ~bit, imp.value & ~bit};
        if (next_seen.insert(key_of(combined)).second) next.push_back(combined);
      }
    }
    for (size_t i = 0; i < level.size(); ++i)
      if (!merged[i]) primes.push_back(level[i]);
    level = std::move(next);
  }
  return primes;
}

BasicRule single_rule(const UpdateRule& rule) {
  if (const auto* set = std::get_if<RuleSet>(&rule)) {
    if (set->alternatives.size() != 1)
      raise(errc::invalid_argument, "rule sets must be merged before CNF conversion");
    return set->alternatives[0];
  }
  return std::visit(
      [](const auto& r) -> BasicRule {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, RuleSet>)
          raise(errc::invalid_argument, "unexpected rule set");
        else
          return BasicRule{r};
      },
      rule);
}

}  // namespace

CnfForm rule_to_cnf(const UpdateRule& rule) {
  BasicRule basic = single_rule(rule);
  std::vector<NodeId> support = rule_support(basic);
  int d = static_cast<int>(support.size());
  if (d > kMaxFanIn) raise(errc::fan_in_too_large, "rule fan-in exceeds the CNF expansion bound");

  int top = 0;
  for (NodeId v : support) top = std::max(top, v + 1);

  // full table; bit k of the index is the value of support[k]
  UpdateRule wrapped = std::visit([](const auto& r) { return UpdateRule{r}; }, basic);
  std::vector<uint8_t> table(size_t{1} << d);
  State probe(top);
  for (uint32_t idx = 0; idx < table.size(); ++idx) {
    for (int k = 0; k < d; ++k) probe.set(support[k], (idx >> k) & 1u);
    table[idx] = evaluate_rule(wrapped, probe) ? 1 : 0;
  }

  // drop variables the function does not depend on
  std::vector<int> essential;
  for (int k = 0; k < d; ++k) {
    bool depends = false;
    for (uint32_t idx = 0; idx < table.size() && !depends; ++idx)
      if (table[idx] != table[idx ^ (1u << k)]) depends = true;
    if (depends) essential.push_back(k);
  }
  int de = static_cast<int>(essential.size());
  std::vector<uint32_t> falsifying;
  for (uint32_t eidx = 0; eidx < (1u << de); ++eidx) {
    uint32_t idx = 0;
    for (int k = 0; k < de; ++k)
      if ((eidx >> k) & 1u) idx |= 1u << essential[k];
    if (!table[idx]) falsifying.push_back(eidx);
  }

  CnfForm cnf;
  for (const Implicant& imp : prime_implicants(falsifying, de)) {
    std::vector<Literal> clause;
    for (int k = 0; k < de; ++k) {
      if (!(imp.mask & (1u << k))) continue;
      // implicant fixes x = 1 -> the clause carries the negated literal
      clause.push_back({support[essential[k]], ((imp.value >> k) & 1u) != 0});
    }
    std::sort(clause.begin(), clause.end());
    cnf.clauses.push_back(std::move(clause));
  }
  std::sort(cnf.clauses.begin(), cnf.clauses.end(),
            [](const std::vector<Literal>& a, const std::vector<Literal>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return cnf;
}

bool cnf_eval(const CnfForm& cnf, const State& state) {
  for (const auto& clause : cnf.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause) {
      if (state.get(lit.node) != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

}  // namespace bnc
