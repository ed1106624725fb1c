// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace bnc {

namespace {

// ---- small digraph helpers (dedup'd edges, optional node mask) ----

std::vector<std::vector<int>> dedup_in_edges(const std::vector<std::vector<int>>& in_edges) {
  std::vector<std::vector<int>> out(in_edges.size());
  for (size_t v = 0; v < in_edges.size(); ++v) {
    out[v] = in_edges[v];
    std::sort(out[v].begin(), out[v].end());
    out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
  }
  return out;
}

bool acyclic(int n, const std::vector<std::vector<int>>& in_edges,
             const std::vector<uint8_t>& removed) {
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
  int kept = 0, seen = 0;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    ++kept;
    if (degree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--degree[w] == 0) ready.push_back(w);
  }
  return seen == kept;
}

// Tarjan strongly connected components; returns component id per node,
// components numbered in reverse topological order.
struct SccResult {
  std::vector<int> comp;
  int count = 0;
};

SccResult tarjan_scc(int n, const std::vector<std::vector<int>>& out_edges) {
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<uint8_t> on_stack(n, 0);
  int next_index = 0;

  // iterative Tarjan
  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < out_edges[f.v].size()) {
        int w = out_edges[f.v][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            res.comp[w] = res.count;
            if (w == f.v) break;
          }
          ++res.count;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return res;
}

}  // namespace

std::vector<int> greedy_feedback_vertex_set(int n, const std::vector<std::vector<int>>& in_edges) {
  auto ins = dedup_in_edges(in_edges);
  std::vector<std::vector<int>> outs(n);
  for (int v = 0; v < n; ++v)
    for (int j : ins[v]) outs[j].push_back(v);

  std::vector<uint8_t> removed(n, 0);
  std::vector<int> chosen;
  while (!acyclic(n, ins, removed)) {
    // nodes on cycles = nodes in cyclic SCCs of the remaining graph
    std::vector<std::vector<int>> alive_out(n);
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      for (int w : outs[v])
        if (!removed[w]) alive_out[v].push_back(w);
    }
    SccResult scc = tarjan_scc(n, alive_out);
    std::vector<int> comp_size(scc.count, 0);
    for (int v = 0; v < n; ++v)
      if (!removed[v]) ++comp_size[scc.comp[v]];

    int best = -1, best_degree = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      bool cyclic = comp_size[scc.comp[v]] > 1;
      if (!cyclic) {
        // singleton: only a self-loop makes it cyclic
        for (int j : ins[v])
          if (j == v && !removed[j]) cyclic = true;
      }
      if (!cyclic) continue;
      int degree = static_cast<int>(alive_out[v].size());
      for (int j : ins[v])
        if (!removed[j]) ++degree;
      if (degree > best_degree) {
        best_degree = degree;
        best = v;
      }
    }
    removed[best] = 1;
    chosen.push_back(best);
  }

  // reverse-order redundancy pruning
  std::vector<int> kept = chosen;
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
    std::vector<uint8_t> mask(n, 0);
    for (int v : kept)
      if (v != *it) mask[v] = 1;
    if (acyclic(n, ins, mask)) kept.erase(std::find(kept.begin(), kept.end(), *it));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

struct ClassView {
  // nodes of each class sorted by descending threshold, index ascending on ties
  std::vector<std::vector<int>> ordered;  // E1, E0, I1, I0
};

ClassView order_classes(const TssInstance& inst, const SignedThresholdNet& classes) {
  ClassView view;
  view.ordered = {classes.e1, classes.e0, classes.i1, classes.i0};
  for (auto& list : view.ordered)
    std::stable_sort(list.begin(), list.end(),
                     [&inst](int a, int b) { return inst.tau[a] > inst.tau[b]; });
  return view;
}

// class-rule edge predicate: source class and the two fixed-point values
bool class_edge(bool src_exc, bool src_on, bool dst_on) {
  return src_exc ? src_on == dst_on : src_on != dst_on;
}

void validate_clique(const TssInstance& inst, const SignedThresholdNet& classes) {
  int m = inst.m;
  if (static_cast<int>(classes.excitatory.size()) != m)
    raise(errc::not_a_clique_instance, "class vector size mismatch");
  std::vector<uint8_t> on(m, 0);
  for (int v : classes.e1) on[v] = 1;
  for (int v : classes.i1) on[v] = 1;
  std::vector<std::vector<uint8_t>> has(m, std::vector<uint8_t>(m, 0));
  for (int v = 0; v < m; ++v) {
    for (size_t k = 0; k < inst.in_edges[v].size(); ++k) {
      int j = inst.in_edges[v][k];
      if (j == v) continue;  // a node cannot help activate itself; inert for the cascade
      if (has[j][v]) raise(errc::not_a_clique_instance, "parallel edge in clique instance");
      has[j][v] = 1;
    }
  }
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (u == v) continue;
      bool expected = class_edge(classes.excitatory[u] != 0, on[u] != 0, on[v] != 0);
      if (has[u][v] != static_cast<uint8_t>(expected))
        raise(errc::not_a_clique_instance, "edges disagree with the signed-clique pattern");
    }
}

}  // namespace

TargetSet solve_clique(const TssInstance& inst, const SignedThresholdNet& classes) {
  validate_clique(inst, classes);
  ClassView view = order_classes(inst, classes);
  const auto& lists = view.ordered;
  int c0 = static_cast<int>(lists[0].size()), c1 = static_cast<int>(lists[1].size());
  int c2 = static_cast<int>(lists[2].size()), c3 = static_cast<int>(lists[3].size());

  for (int total = 0; total <= inst.m; ++total) {
    for (int m0 = 0; m0 <= std::min(total, c0); ++m0)
      for (int m1 = 0; m1 <= std::min(total - m0, c1); ++m1)
        for (int m2 = 0; m2 <= std::min(total - m0 - m1, c2); ++m2) {
          int m3 = total - m0 - m1 - m2;
          if (m3 < 0 || m3 > c3) continue;
          std::vector<int> seed;
          seed.reserve(total);
          seed.insert(seed.end(), lists[0].begin(), lists[0].begin() + m0);
          seed.insert(seed.end(), lists[1].begin(), lists[1].begin() + m1);
          seed.insert(seed.end(), lists[2].begin(), lists[2].begin() + m2);
          seed.insert(seed.end(), lists[3].begin(), lists[3].begin() + m3);
          std::sort(seed.begin(), seed.end());
          if (is_target_set(inst, seed)) return TargetSet{seed};
        }
  }
  raise(errc::infeasible, "clique enumeration found no target set");  // unreachable: all nodes work
}

namespace {

struct SubInstance {
  TssInstance inst;
  SignedThresholdNet classes;
  std::vector<int> nodes;  // sub index -> original index
};

SubInstance induce(const TssInstance& inst, const SignedThresholdNet& classes,
                   const std::vector<int>& nodes, const std::vector<int>& tau) {
  SubInstance sub;
  sub.nodes = nodes;
  std::vector<int> remap(inst.m, -1);
  for (size_t k = 0; k < nodes.size(); ++k) remap[nodes[k]] = static_cast<int>(k);
  sub.inst.m = static_cast<int>(nodes.size());
  sub.inst.in_edges.resize(sub.inst.m);
  sub.inst.tau.resize(sub.inst.m);
  sub.inst.provenance.resize(sub.inst.m);
  sub.classes.excitatory.resize(sub.inst.m);
  for (size_t k = 0; k < nodes.size(); ++k) {
    int v = nodes[k];
    sub.inst.tau[k] = tau[v];
    sub.inst.provenance[k] = inst.provenance[v];
    for (int j : inst.in_edges[v])
      if (remap[j] >= 0) sub.inst.in_edges[k].push_back(remap[j]);
    std::sort(sub.inst.in_edges[k].begin(), sub.inst.in_edges[k].end());
    sub.classes.excitatory[k] = classes.excitatory[v];
  }
  std::vector<uint8_t> on(inst.m, 0);
  for (int v : classes.e1) on[v] = 1;
  for (int v : classes.i1) on[v] = 1;
  for (size_t k = 0; k < nodes.size(); ++k) {
    int v = nodes[k];
    bool exc = classes.excitatory[v] != 0;
    (exc ? (on[v] ? sub.classes.e1 : sub.classes.e0) : (on[v] ? sub.classes.i1 : sub.classes.i0))
        .push_back(static_cast<int>(k));
  }
  return sub;
}

}  // namespace

TargetSet solve_block_cactus(const TssInstance& inst, const CliquePartition& partition,
                             const SignedThresholdNet& classes) {
  int m = inst.m;
  std::vector<int> block_of(m, -1);
  for (size_t b = 0; b < partition.blocks.size(); ++b)
    for (int v : partition.blocks[b]) {
      if (v < 0 || v >= m || block_of[v] != -1)
        raise(errc::not_a_clique_partition, "blocks must partition the node set");
      block_of[v] = static_cast<int>(b);
    }
  for (int v = 0; v < m; ++v)
    if (block_of[v] == -1) raise(errc::not_a_clique_partition, "blocks must cover every node");

  int nb = static_cast<int>(partition.blocks.size());
  // cross edges; at most one arc in total between any two blocks
  struct Arc {
    int from, to;  // instance nodes
  };
  std::vector<std::vector<int>> adjacent(nb);  // block -> neighbor blocks
  std::vector<std::vector<Arc>> arc(nb, std::vector<Arc>(nb, {-1, -1}));
  for (int v = 0; v < m; ++v)
    for (int j : inst.in_edges[v]) {
      int bj = block_of[j], bv = block_of[v];
      if (bj == bv) continue;
      if (arc[bj][bv].from != -1 || arc[bv][bj].from != -1)
        raise(errc::not_a_tree, "multiple edges between the same pair of blocks");
      arc[bj][bv] = {j, v};
      adjacent[bj].push_back(bv);
      adjacent[bv].push_back(bj);
    }

  // tree check: the contracted undirected graph must be acyclic
  {
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int a = 0; a < nb; ++a)
      for (int b : adjacent[a]) {
        if (b < a) continue;
        if (find(a) == find(b)) raise(errc::not_a_tree, "contracted graph contains a cycle");
        parent[find(a)] = find(b);
      }
  }

  std::vector<int> tau = inst.tau;
  std::vector<uint8_t> done(nb, 0);
  std::vector<int> degree(nb, 0);
  for (int b = 0; b < nb; ++b) degree[b] = static_cast<int>(adjacent[b].size());

  std::vector<int> members;
  for (int solved = 0; solved < nb; ++solved) {
    int leaf = -1;
    for (int b = 0; b < nb; ++b)
      if (!done[b] && degree[b] <= 1) {
        leaf = b;
        break;
      }
    if (leaf < 0) raise(errc::not_a_tree, "contracted graph contains a cycle");

    // the unique live cross arc, if any
    int peer = -1;
    for (int b : adjacent[leaf])
      if (!done[b]) peer = b;

    if (peer >= 0 && arc[peer][leaf].from != -1) {
      // incoming arc: the leaf endpoint is relaxed before the leaf is solved
      tau[arc[peer][leaf].to] -= 1;
    }
    SubInstance sub = induce(inst, classes, partition.blocks[leaf], tau);
    TargetSet local = solve_clique(sub.inst, sub.classes);
    for (int k : local.members) members.push_back(sub.nodes[k]);
    if (peer >= 0 && arc[leaf][peer].from != -1) {
      // outgoing arc: the receiving endpoint in the remainder is relaxed
      tau[arc[leaf][peer].to] -= 1;
    }
    done[leaf] = 1;
    for (int b : adjacent[leaf])
      if (!done[b]) --degree[b];
    degree[leaf] = 0;
  }
  std::sort(members.begin(), members.end());
  return TargetSet{members};
}

SignedThresholdNet uniform_classes(int m) {
  SignedThresholdNet classes;
  classes.excitatory.assign(m, 1);
  classes.e1.resize(m);
  std::iota(classes.e1.begin(), classes.e1.end(), 0);
  return classes;
}

CactusifyResult cactusify(const TssInstance& inst,
                          const std::vector<std::vector<int>>& clusters) {
  CactusifyResult res;
  res.instance = inst;
  res.partition.blocks = clusters;

  int m = inst.m;
  std::vector<int> cluster_of(m, -1);
  for (size_t c = 0; c < clusters.size(); ++c)
    for (int v : clusters[c]) {
      if (v < 0 || v >= m || cluster_of[v] != -1)
        raise(errc::not_a_clique_partition, "clusters must partition the node set");
      cluster_of[v] = static_cast<int>(c);
    }
  for (int v = 0; v < m; ++v)
    if (cluster_of[v] == -1) raise(errc::not_a_clique_partition, "clusters must cover every node");

  auto has_edge = [&](int from, int to) {
    const auto& ins = res.instance.in_edges[to];
    return std::binary_search(ins.begin(), ins.end(), from);
  };

  // complete every cluster; each added edge raises the receiving threshold
  for (const auto& cluster : clusters)
    for (size_t a = 0; a < cluster.size(); ++a)
      for (size_t b = a + 1; b < cluster.size(); ++b) {
        int u = cluster[a], v = cluster[b];
        if (!has_edge(u, v)) {
          auto& ins = res.instance.in_edges[v];
          ins.insert(std::lower_bound(ins.begin(), ins.end(), u), u);
          res.instance.tau[v] += 1;
        }
        if (!has_edge(v, u)) {
          auto& ins = res.instance.in_edges[u];
          ins.insert(std::lower_bound(ins.begin(), ins.end(), v), v);
          res.instance.tau[u] += 1;
        }
      }

  // cross-cluster arcs, processed from the highest so that the removed
  // (redundant) arcs are the lowest-numbered ones
  std::vector<std::pair<int, int>> arcs;  // (from, to)
  for (int v = 0; v < m; ++v)
    for (int j : res.instance.in_edges[v])
      if (cluster_of[j] != cluster_of[v]) arcs.push_back({j, v});
  std::sort(arcs.begin(), arcs.end(), std::greater<>());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  std::vector<int> parent(clusters.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [from, to] : arcs) {
    int a = find(cluster_of[from]), b = find(cluster_of[to]);
    auto& ins = res.instance.in_edges[to];
    if (a != b) {
      parent[a] = b;
      // a kept arc contributes a single edge; parallel copies go too
      auto first = std::find(ins.begin(), ins.end(), from);
      if (first != ins.end() && std::next(first) != ins.end() && *std::next(first) == from) {
        ins.erase(std::remove(std::next(first), ins.end(), from), ins.end());
        res.removed_arcs.push_back({from, to});
      }
      continue;
    }
    ins.erase(std::remove(ins.begin(), ins.end(), from), ins.end());
    res.removed_arcs.push_back({from, to});
  }
  std::sort(res.removed_arcs.begin(), res.removed_arcs.end());
  res.instance.validate();
  return res;
}

namespace {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

struct HierarchySolver {
  const TssInstance& inst;
  const SignedThresholdNet& classes;
  int k;

  TargetSet solve(int offset, int depth, std::vector<int> tau) const {
    if (depth == 0) {
      if (tau[offset] <= 0) return {};
      return TargetSet{{offset}};
    }
    std::vector<int> range(ipow(k + 1, depth));
    std::iota(range.begin(), range.end(), offset);
    if (depth == 1) {
      SubInstance sub = induce(inst, classes, range, tau);
      TargetSet local = solve_clique(sub.inst, sub.classes);
      for (int& v : local.members) v = sub.nodes[v];
      return local;
    }

    int sub_size = static_cast<int>(ipow(k + 1, depth - 1));
    int hub = offset;
    TargetSet root = solve(offset, depth - 1, tau);
    std::vector<int> committed = root.members;
    std::vector<TargetSet> helped(k);
    std::vector<uint8_t> deferred(k, 0);
    for (int s = 1; s <= k; ++s) {
      int copy = offset + s * sub_size;
      TargetSet plain = solve(copy, depth - 1, tau);
      std::vector<int> tau_minus = tau;
      for (int v = copy; v < copy + sub_size; ++v)
        if (std::binary_search(inst.in_edges[v].begin(), inst.in_edges[v].end(), hub))
          tau_minus[v] -= 1;
      TargetSet with_hub = solve(copy, depth - 1, tau_minus);
      int gain = plain.size() - with_hub.size();
      if (gain <= 0) {
        committed.insert(committed.end(), plain.members.begin(), plain.members.end());
      } else {
        deferred[s - 1] = 1;
        helped[s - 1] = std::move(with_hub);
      }
    }

    std::vector<int> result = committed;
    SubInstance whole = induce(inst, classes, range, tau);
    std::vector<int> local_seed;
    for (int v : committed) local_seed.push_back(v - offset);
    std::sort(local_seed.begin(), local_seed.end());
    std::vector<int> fix = cascade(whole.inst, local_seed).fixpoint();
    bool hub_active = std::binary_search(fix.begin(), fix.end(), hub - offset);
    if (!hub_active) result.push_back(hub);
    for (int s = 1; s <= k; ++s)
      if (deferred[s - 1])
        result.insert(result.end(), helped[s - 1].members.begin(), helped[s - 1].members.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return TargetSet{result};
  }
};

}  // namespace

TargetSet solve_hierarchical(const TssInstance& inst, const HierarchySpec& spec,
                             const SignedThresholdNet& classes) {
  if (spec.k < 1 || spec.depth < 1 || inst.m != ipow(spec.k + 1, spec.depth) || spec.hub != 0)
    raise(errc::not_hierarchical, "instance does not match the hierarchical layout");
  HierarchySolver solver{inst, classes, spec.k};
  return solver.solve(0, spec.depth, inst.tau);
}

TargetSet solve_unanimous_fvs(const TssInstance& inst) {
  for (int v = 0; v < inst.m; ++v)
    if (inst.tau[v] != inst.in_degree(v))
      raise(errc::invalid_argument, "instance thresholds are not unanimous");

  std::vector<int> members = mandatory_seeds(inst);  // empty under strict unanimity

  auto ins = dedup_in_edges(inst.in_edges);
  std::vector<std::vector<int>> outs(inst.m);
  for (int v = 0; v < inst.m; ++v)
    for (int j : ins[v]) outs[j].push_back(v);
  SccResult scc = tarjan_scc(inst.m, outs);

  std::vector<std::vector<int>> comp_nodes(scc.count);
  for (int v = 0; v < inst.m; ++v) comp_nodes[scc.comp[v]].push_back(v);
  for (auto& nodes : comp_nodes) {
    bool cyclic = nodes.size() > 1;
    if (!cyclic)
      for (int j : ins[nodes[0]])
        if (j == nodes[0]) cyclic = true;
    if (!cyclic) continue;
    // induced subgraph FVS
    std::sort(nodes.begin(), nodes.end());
    std::vector<int> remap(inst.m, -1);
    for (size_t i = 0; i < nodes.size(); ++i) remap[nodes[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> local(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
      for (int j : ins[nodes[i]])
        if (remap[j] >= 0) local[i].push_back(remap[j]);
    for (int v : greedy_feedback_vertex_set(static_cast<int>(nodes.size()), local))
      members.push_back(nodes[v]);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return TargetSet{members};
}

TargetSet solve_cycle_baseline(const RegulatoryNetwork& net) {
  std::vector<int> members = greedy_feedback_vertex_set(net.n, net.in_edges);

  // weakly connected components without a chosen node get one patch node
  std::vector<int> parent(net.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int v = 0; v < net.n; ++v)
    for (int j : net.in_edges[v]) parent[find(j)] = find(v);
  std::vector<uint8_t> hit(net.n, 0);
  for (int v : members) hit[find(v)] = 1;
  for (int v = 0; v < net.n; ++v) {
    int root = find(v);
    if (!hit[root]) {
      members.push_back(v);  // ascending scan picks the lowest index per component
      hit[root] = 1;
    }
  }
  std::sort(members.begin(), members.end());
  return TargetSet{members};
}

bool prop_conditions_unanimous(const TssInstance& inst, const std::vector<int>& S) {
  std::vector<uint8_t> in_s(inst.m, 0);
  for (int v : S) in_s[v] = 1;
  if (!acyclic(inst.m, inst.in_edges, in_s)) return false;

  // forward reachability from S plus the self-firing roots
  std::vector<uint8_t> reached(inst.m, 0);
  std::vector<int> queue;
  for (int v = 0; v < inst.m; ++v)
    if (in_s[v] || inst.tau[v] <= 0) {
      reached[v] = 1;
      queue.push_back(v);
    }
  auto outs = inst.out_edges();
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : outs[v])
      if (!reached[w]) {
        reached[w] = 1;
        queue.push_back(w);
      }
  }
  for (int v = 0; v < inst.m; ++v)
    if (!reached[v]) return false;
  return true;
}

}  // namespace bnc
