// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/gen.hpp"

#include <algorithm>
#include <numeric>

#include "bnc/rng.hpp"

namespace bnc {

std::string GenSpec::family_name() const {
  switch (family) {
    case Family::erdos_renyi: return "er";
    case Family::scale_free: return "sf";
    case Family::hierarchical: return "hierarchical";
    case Family::block_cactus: return "cactus";
  }
  return "?";
}

double GenSpec::param() const {
  switch (family) {
    case Family::erdos_renyi: return er_p;
    case Family::scale_free: return sf_m;
    case Family::hierarchical: return hier_k;
    case Family::block_cactus:
      return cactus_blocks.empty()
                 ? 0.0
                 : static_cast<double>(std::accumulate(cactus_blocks.begin(),
                                                       cactus_blocks.end(), 0)) /
                       cactus_blocks.size();
  }
  return 0.0;
}

namespace {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

using EdgeList = std::vector<std::pair<int, int>>;  // (source, target)

void hierarchical_edges(int offset, int depth, int k, EdgeList& edges) {
  if (depth == 0) return;
  if (depth == 1) {
    for (int a = offset; a <= offset + k; ++a)
      for (int b = a + 1; b <= offset + k; ++b) {
        edges.push_back({a, b});
        edges.push_back({b, a});
      }
    return;
  }
  int sub = static_cast<int>(ipow(k + 1, depth - 1));
  hierarchical_edges(offset, depth - 1, k, edges);
  for (int s = 1; s <= k; ++s) {
    int copy = offset + s * sub;
    hierarchical_edges(copy, depth - 1, k, edges);
    for (int v = copy; v < copy + sub; ++v) {
      edges.push_back({offset, v});
      edges.push_back({v, offset});
    }
  }
}

EdgeList generate_edges(const GenSpec& spec, Rng& rng) {
  EdgeList edges;
  switch (spec.family) {
    case GenSpec::Family::erdos_renyi: {
      for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j)
          if (i != j && rng.bernoulli(spec.er_p)) edges.push_back({i, j});
      break;
    }
    case GenSpec::Family::scale_free: {
      if (spec.sf_m < 1) raise(errc::invalid_argument, "attachment parameter must be positive");
      std::vector<int> degree(spec.n, 0);
      for (int v = 1; v < spec.n; ++v) {
        int attach = std::min(spec.sf_m, v);
        std::vector<int> targets;
        while (static_cast<int>(targets.size()) < attach) {
          // weight degree+1 keeps isolated nodes attachable
          long long total = 0;
          for (int u = 0; u < v; ++u) total += degree[u] + 1;
          long long pick = static_cast<long long>(rng.below(static_cast<uint64_t>(total)));
          int chosen = 0;
          for (int u = 0; u < v; ++u) {
            pick -= degree[u] + 1;
            if (pick < 0) {
              chosen = u;
              break;
            }
          }
          if (std::find(targets.begin(), targets.end(), chosen) == targets.end())
            targets.push_back(chosen);
        }
        for (int u : targets) {
          if (spec.sf_old_to_new)
            edges.push_back({u, v});
          else if (rng.bernoulli(0.5))
            edges.push_back({v, u});
          else
            edges.push_back({u, v});
          ++degree[u];
          ++degree[v];
        }
      }
      break;
    }
    case GenSpec::Family::hierarchical: {
      if (spec.hier_k < 1 || spec.hier_depth < 1 ||
          spec.n != ipow(spec.hier_k + 1, spec.hier_depth))
        raise(errc::invalid_argument, "hierarchical networks need n = (k+1)^depth");
      hierarchical_edges(0, spec.hier_depth, spec.hier_k, edges);
      break;
    }
    case GenSpec::Family::block_cactus: {
      int sum = std::accumulate(spec.cactus_blocks.begin(), spec.cactus_blocks.end(), 0);
      if (spec.cactus_blocks.empty() || sum != spec.n)
        raise(errc::invalid_argument, "block sizes must sum to n");
      std::vector<std::vector<int>> blocks;
      int next = 0;
      for (int size : spec.cactus_blocks) {
        if (size < 1) raise(errc::invalid_argument, "blocks must be non-empty");
        std::vector<int> block(size);
        std::iota(block.begin(), block.end(), next);
        next += size;
        blocks.push_back(block);
      }
      for (const auto& block : blocks)
        for (size_t a = 0; a < block.size(); ++a)
          for (size_t b = a + 1; b < block.size(); ++b) {
            edges.push_back({block[a], block[b]});
            edges.push_back({block[b], block[a]});
          }
      // random recursive tree over the blocks, one directed cross edge each
      for (size_t b = 1; b < blocks.size(); ++b) {
        int parent = rng.below_int(static_cast<int>(b));
        int u = blocks[parent][rng.below_int(static_cast<int>(blocks[parent].size()))];
        int v = blocks[b][rng.below_int(static_cast<int>(blocks[b].size()))];
        if (rng.bernoulli(0.5)) std::swap(u, v);
        edges.push_back({u, v});
      }
      break;
    }
  }
  return edges;
}

}  // namespace

RegulatoryNetwork generate(const GenSpec& spec) {
  if (spec.n < 1) raise(errc::invalid_argument, "node count must be positive");
  if (spec.sign_prob < 0.0 || spec.sign_prob > 1.0)
    raise(errc::invalid_argument, "sign probability must lie in [0, 1]");
  if (!spec.tau_per_node.empty() && static_cast<int>(spec.tau_per_node.size()) != spec.n)
    raise(errc::invalid_argument, "per-node threshold list must have n entries");

  Rng rng(spec.seed);
  std::vector<uint8_t> excitatory(spec.n);
  for (int v = 0; v < spec.n; ++v) excitatory[v] = rng.bernoulli(spec.sign_prob) ? 1 : 0;

  EdgeList edges = generate_edges(spec, rng);
  std::vector<std::vector<int>> in_lists(spec.n);
  for (const auto& [u, v] : edges) in_lists[v].push_back(u);

  std::vector<UpdateRule> rules(spec.n);
  for (int v = 0; v < spec.n; ++v) {
    std::sort(in_lists[v].begin(), in_lists[v].end());
    in_lists[v].erase(std::unique(in_lists[v].begin(), in_lists[v].end()), in_lists[v].end());
    ThresholdRule rule;
    for (int u : in_lists[v]) rule.weights.push_back({u, excitatory[u] ? 1.0 : -1.0});
    rule.tau = spec.tau_per_node.empty() ? spec.tau_value : spec.tau_per_node[v];
    rules[v] = std::move(rule);
  }
  return RegulatoryNetwork::from_rules(std::move(rules));
}

State pick_attractor(const RegulatoryNetwork& net) {
  FixedPointOptions opts;
  opts.limit = 1;
  std::vector<State> points = find_fixed_points(net, opts);
  if (points.empty()) raise(errc::no_fixed_point, "the network has no fixed point");
  return points.front();
}

std::optional<HierarchySpec> hierarchy_of(const GenSpec& spec) {
  if (spec.family != GenSpec::Family::hierarchical) return std::nullopt;
  return HierarchySpec{spec.hier_k, spec.hier_depth, 0};
}

std::optional<CliquePartition> partition_of(const GenSpec& spec) {
  if (spec.family != GenSpec::Family::block_cactus) return std::nullopt;
  CliquePartition partition;
  int next = 0;
  for (int size : spec.cactus_blocks) {
    std::vector<int> block(size);
    std::iota(block.begin(), block.end(), next);
    next += size;
    partition.blocks.push_back(block);
  }
  return partition;
}

}  // namespace bnc
