// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <vector>

#include "bnc/network.hpp"

namespace bnc {

struct Literal {
  NodeId node = -1;
  bool negated = false;
  auto operator<=>(const Literal&) const = default;
};

/// Conjunction of disjunctive clauses, semantically equal to the rule it was
/// derived from on every assignment of its support.
struct CnfForm {
  std::vector<std::vector<Literal>> clauses;  // canonical: clauses and literals sorted
  bool operator==(const CnfForm&) const = default;
};

/// Converts a rule to CNF. The falsifying assignments are expanded to
/// maxterms and then merged into the full set of prime implicates (iterated
/// consensus plus subsumption), which is canonical and keeps the clause
/// count deterministic. Variables the rule does not actually depend on are
/// eliminated first. Fan-in is capped at 16.
CnfForm rule_to_cnf(const UpdateRule& rule);

bool cnf_eval(const CnfForm& cnf, const State& state);

}  // namespace bnc
