// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/tss.hpp"

#include <algorithm>
#include <sstream>

#include "bnc/log.hpp"

namespace bnc {

TssInstance TssInstance::plain(std::vector<std::vector<int>> in_edges, std::vector<int> tau) {
  TssInstance inst;
  inst.m = static_cast<int>(tau.size());
  inst.in_edges = std::move(in_edges);
  inst.tau = std::move(tau);
  inst.provenance.reserve(inst.m);
  for (int v = 0; v < inst.m; ++v) inst.provenance.push_back(Provenance::original(v));
  for (auto& ins : inst.in_edges) std::sort(ins.begin(), ins.end());
  inst.validate();
  return inst;
}

void TssInstance::validate() const {
  if (static_cast<int>(in_edges.size()) != m || static_cast<int>(tau.size()) != m ||
      static_cast<int>(provenance.size()) != m)
    raise(errc::invalid_argument, "instance field sizes disagree with node count");
  for (int v = 0; v < m; ++v)
    for (int j : in_edges[v])
      if (j < 0 || j >= m) raise(errc::index_out_of_range, "instance edge out of range");
}

std::vector<std::vector<int>> TssInstance::out_edges() const {
  std::vector<std::vector<int>> out(m);
  for (int v = 0; v < m; ++v)
    for (int j : in_edges[v]) out[j].push_back(v);
  return out;
}

std::vector<int> TssInstance::original_nodes() const {
  std::vector<int> out;
  for (int v = 0; v < m; ++v)
    if (provenance[v].kind == Provenance::Kind::original) out.push_back(v);
  return out;
}

CascadeTrace cascade(const TssInstance& inst, const std::vector<int>& seed) {
  std::vector<uint8_t> active(inst.m, 0);
  for (int v : seed) {
    if (v < 0 || v >= inst.m) raise(errc::index_out_of_range, "seed node out of range");
    active[v] = 1;
  }
  std::vector<int> count(inst.m, 0);
  auto out = inst.out_edges();
  std::vector<int> current;
  for (int v = 0; v < inst.m; ++v)
    if (active[v]) current.push_back(v);
  for (int v : current)
    for (int w : out[v]) ++count[w];

  CascadeTrace trace;
  trace.layers.push_back(current);
  while (true) {
    std::vector<int> fresh;
    for (int v = 0; v < inst.m; ++v)
      if (!active[v] && count[v] >= inst.tau[v]) fresh.push_back(v);
    if (fresh.empty()) break;
    for (int v : fresh) {
      active[v] = 1;
      for (int w : out[v]) ++count[w];
    }
    std::vector<int> layer;
    layer.reserve(inst.m);
    for (int v = 0; v < inst.m; ++v)
      if (active[v]) layer.push_back(v);
    trace.layers.push_back(std::move(layer));
  }
  return trace;
}

bool covers(const TssInstance& inst, const std::vector<int>& active, Coverage coverage) {
  if (coverage == Coverage::all_nodes) return static_cast<int>(active.size()) == inst.m;
  std::vector<uint8_t> in(inst.m, 0);
  for (int v : active) in[v] = 1;
  for (int v = 0; v < inst.m; ++v)
    if (inst.provenance[v].kind == Provenance::Kind::original && !in[v]) return false;
  return true;
}

bool is_target_set(const TssInstance& inst, const std::vector<int>& seed, Coverage coverage) {
  return covers(inst, cascade(inst, seed).fixpoint(), coverage);
}

std::vector<int> mandatory_seeds(const TssInstance& inst) {
  std::vector<int> out;
  for (int v = 0; v < inst.m; ++v)
    if (inst.tau[v] > inst.in_degree(v)) out.push_back(v);
  return out;
}

namespace {

std::vector<int> goal_nodes(const TssInstance& inst, Coverage coverage) {
  if (coverage == Coverage::originals) return inst.original_nodes();
  std::vector<int> all(inst.m);
  for (int v = 0; v < inst.m; ++v) all[v] = v;
  return all;
}

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TargetSet solve_exact(const TssInstance& inst, const ExactOptions& opts) {
  std::vector<int> candidates =
      opts.restrict_to_original ? inst.original_nodes() : goal_nodes(inst, Coverage::all_nodes);
  if (static_cast<int>(candidates.size()) > opts.candidate_budget)
    raise(errc::budget_exceeded, "candidate count exceeds the exact-search budget");
  log_debug("exact search over " + std::to_string(candidates.size()) + " candidates, " +
            std::to_string(inst.m) + " instance nodes");

  std::vector<uint8_t> is_candidate(inst.m, 0);
  for (int v : candidates) is_candidate[v] = 1;

  // Goal nodes the cascade can never reach must be seeded in every solution.
  std::vector<int> required;
  for (int v : goal_nodes(inst, opts.coverage))
    if (inst.tau[v] > inst.in_degree(v)) {
      if (!is_candidate[v])
        raise(errc::infeasible, "a goal node can only be activated by seeding a non-candidate");
      required.push_back(v);
    }

  if (!is_target_set(inst, candidates, opts.coverage))
    raise(errc::infeasible, "no candidate subset is a target set");

  std::vector<int> free_nodes;
  for (int v : candidates)
    if (std::find(required.begin(), required.end(), v) == required.end()) free_nodes.push_back(v);

  if (is_target_set(inst, required, opts.coverage)) return TargetSet{required};

  int f = static_cast<int>(free_nodes.size());
  for (int extra = 1; extra <= f; ++extra) {
    // lexicographically ordered combinations of free candidates
    std::vector<int> idx(extra);
    for (int i = 0; i < extra; ++i) idx[i] = i;
    while (true) {
      std::vector<int> chosen(extra);
      for (int i = 0; i < extra; ++i) chosen[i] = free_nodes[idx[i]];
      std::vector<int> seed = merge_sorted(required, chosen);
      if (is_target_set(inst, seed, opts.coverage)) return TargetSet{seed};
      int i = extra - 1;
      while (i >= 0 && idx[i] == f - extra + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  raise(errc::infeasible, "no candidate subset is a target set");
}

TargetSet solve_greedy(const TssInstance& inst, const GreedyOptions& opts) {
  std::vector<int> candidates =
      opts.restrict_to_original ? inst.original_nodes() : goal_nodes(inst, Coverage::all_nodes);
  std::vector<int> goal = goal_nodes(inst, opts.coverage);
  std::vector<uint8_t> in_goal(inst.m, 0);
  for (int v : goal) in_goal[v] = 1;

  auto goal_reached = [&](const std::vector<int>& fixpoint) {
    int c = 0;
    for (int v : fixpoint) c += in_goal[v];
    return c;
  };

  std::vector<int> added;  // insertion order
  std::vector<int> seed;
  int covered = goal_reached(cascade(inst, seed).fixpoint());
  int want = static_cast<int>(goal.size());

  while (covered < want) {
    int best = -1;
    int best_cover = covered;
    for (int c : candidates) {
      if (std::binary_search(seed.begin(), seed.end(), c)) continue;
      std::vector<int> trial = merge_sorted(seed, {c});
      int reach = goal_reached(cascade(inst, trial).fixpoint());
      if (reach > best_cover) {  // strict: ties keep the lowest index
        best_cover = reach;
        best = c;
      }
    }
    if (best < 0) raise(errc::infeasible, "greedy cannot extend coverage over the candidates");
    seed = merge_sorted(seed, {best});
    added.push_back(best);
    covered = best_cover;
  }

  // prune redundant members, most recently added first
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    std::vector<int> reduced;
    reduced.reserve(seed.size());
    for (int v : seed)
      if (v != *it) reduced.push_back(v);
    if (reduced.size() != seed.size() && is_target_set(inst, reduced, opts.coverage))
      seed = std::move(reduced);
  }
  return TargetSet{seed};
}

CascadeTrace minimal_certificate(const TssInstance& inst, const std::vector<int>& seed,
                                 Coverage coverage) {
  CascadeTrace trace = cascade(inst, seed);
  if (!covers(inst, trace.fixpoint(), coverage))
    raise(errc::not_a_target_set, "seed does not activate the goal set");
  return trace;
}

namespace {

// "coef name" terms joined with explicit signs, LP-style.
class LinearExpr {
 public:
  void add(long long coef, const std::string& name) { terms_.push_back({coef, name}); }
  bool empty() const { return terms_.empty(); }
  std::string str() const {
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
      long long c = terms_[i].first;
      if (i == 0) {
        if (c < 0) out += "- ";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      long long mag = c < 0 ? -c : c;
      if (mag != 1) out += std::to_string(mag) + " ";
      out += terms_[i].second;
    }
    return out;
  }

 private:
  std::vector<std::pair<long long, std::string>> terms_;
};

std::string svar(int i) { return "s_" + std::to_string(i + 1); }
std::string evar(int i, int j) {
  return "e_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

void export_ilp(const TssInstance& inst, std::ostream& sink) {
  int m = inst.m;
  sink << "\\ target set selection integer program\n";
  sink << "Minimize\n obj:";
  for (int i = 0; i < m; ++i) sink << (i == 0 ? " " : " + ") << svar(i);
  sink << "\nSubject To\n";

  auto out = inst.out_edges();
  for (int i = 0; i < m; ++i) {
    // multiplicity of each out-neighbor
    std::vector<std::pair<int, int>> mult;
    for (int j : out[i]) {
      if (!mult.empty() && mult.back().first == j)
        ++mult.back().second;
      else
        mult.push_back({j, 1});
    }
    std::sort(mult.begin(), mult.end());
    LinearExpr expr;
    for (const auto& [j, k] : mult) expr.add(k, evar(i, j));
    expr.add(inst.tau[i], svar(i));
    sink << " t_" << (i + 1) << ": " << expr.str() << " >= " << inst.tau[i] << "\n";
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      sink << " o_" << (i + 1) << "_" << (j + 1) << ": " << evar(i, j) << " + " << evar(j, i)
           << " = 1\n";
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      for (int l = 0; l < m; ++l) {
        if (l == i || l == j) continue;
        sink << " tr_" << (i + 1) << "_" << (j + 1) << "_" << (l + 1) << ": " << evar(i, j)
             << " + " << evar(j, l) << " + " << evar(l, i) << " <= 2\n";
      }
    }
  sink << "Binaries\n";
  for (int i = 0; i < m; ++i) sink << " " << svar(i) << "\n";
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (j != i) sink << " " << evar(i, j) << "\n";
  sink << "End\n";
}

std::string export_ilp_string(const TssInstance& inst) {
  std::ostringstream out;
  export_ilp(inst, out);
  return out.str();
}

}  // namespace bnc
