// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>

#include "bnc/experiment.hpp"
#include "bnc/gen.hpp"
#include "bnc/io.hpp"
#include "bnc/reduction.hpp"
#include "bnc/solvers.hpp"
#include "bnc/verify.hpp"
#include "json.hpp"

namespace {

thread_local std::string g_last_error;

int code_of(const bnc::Error& e) {
  switch (e.code()) {
    case bnc::errc::parse_error:
      return BNC_EPARSE;
    case bnc::errc::invalid_argument:
    case bnc::errc::index_out_of_range:
    case bnc::errc::dimension_mismatch:
    case bnc::errc::invalid_alternative:
      return BNC_EINVAL;
    case bnc::errc::io_error:
      return BNC_EIO;
    default:
      return BNC_EDOMAIN;
  }
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return BNC_OK;
  } catch (const bnc::Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BNC_EDOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bnc::raise(bnc::errc::io_error, std::string("cannot open ") + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const char* path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bnc::raise(bnc::errc::io_error, std::string("cannot write ") + path);
  out << text;
}

int* dup_ints(const std::vector<int>& values) {
  int* out = static_cast<int*>(std::malloc(sizeof(int) * std::max<size_t>(values.size(), 1)));
  std::memcpy(out, values.data(), sizeof(int) * values.size());
  return out;
}

bnc::Attractor parse_attractor_arg(const char* text, int n) {
  if (text == nullptr || *text == '\0')
    bnc::raise(bnc::errc::invalid_argument, "an attractor bit string is required");
  bnc::Attractor a;
  std::istringstream in(text);
  std::string bits;
  while (in >> bits) {
    if (static_cast<int>(bits.size()) != n)
      bnc::raise(bnc::errc::invalid_argument, "attractor states need one bit per node");
    a.states.push_back(bnc::State::from_string(bits));
  }
  if (a.states.empty()) bnc::raise(bnc::errc::invalid_argument, "empty attractor");
  return a;
}

}  // namespace

struct bnc_network {
  bnc::NetworkDocument doc;
};

// Instance bundle: reduction metadata rides along so structured solvers can
// run without re-deriving it.
struct bnc_instance {
  bnc::TssInstance inst;
  std::optional<bnc::SignedThresholdNet> classes;
  bnc::Coverage coverage = bnc::Coverage::all_nodes;
};

extern "C" {

const char* bnc_version(void) { return "1.0.0"; }

const char* bnc_last_error(void) { return g_last_error.c_str(); }

void bnc_free(void* ptr) { std::free(ptr); }

int bnc_network_parse(const char* text, bnc_network** out) {
  return guarded([&] {
    auto* net = new bnc_network{bnc::parse_network(text ? text : "")};
    *out = net;
  });
}

int bnc_network_load(const char* path, bnc_network** out) {
  return guarded([&] {
    auto* net = new bnc_network{bnc::parse_network(slurp(path))};
    *out = net;
  });
}

int bnc_network_serialize(const bnc_network* net, char** out) {
  return guarded([&] { *out = dup_string(bnc::serialize_network(net->doc)); });
}

int bnc_network_save(const bnc_network* net, const char* path) {
  return guarded([&] { spit(path, bnc::serialize_network(net->doc)); });
}

void bnc_network_release(bnc_network* net) { delete net; }

int bnc_network_size(const bnc_network* net) { return net->doc.net.n; }

int bnc_network_node_name(const bnc_network* net, int node, char** out) {
  return guarded([&] {
    if (node < 0 || node >= net->doc.net.n)
      bnc::raise(bnc::errc::index_out_of_range, "node index out of range");
    *out = dup_string(net->doc.net.names[node]);
  });
}

int bnc_network_node_index(const bnc_network* net, const char* name) {
  return net->doc.net.node_by_name(name ? name : "");
}

int bnc_network_attractor_hint(const bnc_network* net, char** out) {
  return guarded([&] {
    if (!net->doc.attractor) {
      *out = nullptr;
      return;
    }
    std::string text;
    for (const bnc::State& s : net->doc.attractor->states)
      text += (text.empty() ? "" : " ") + s.to_string();
    *out = dup_string(text);
  });
}

int bnc_network_fixed_points(const bnc_network* net, int limit, char** out) {
  return guarded([&] {
    bnc::FixedPointOptions opts;
    if (limit > 0) opts.limit = limit;
    std::string text;
    for (const bnc::State& s : bnc::find_fixed_points(net->doc.net, opts))
      text += s.to_string() + "\n";
    *out = dup_string(text);
  });
}

int bnc_network_attractor_from(const bnc_network* net, const char* initial, char** out) {
  return guarded([&] {
    bnc::State start = bnc::State::from_string(initial ? initial : "");
    if (start.size() != net->doc.net.n)
      bnc::raise(bnc::errc::invalid_argument, "initial state needs one bit per node");
    std::string text;
    for (const bnc::State& s : bnc::find_attractor_from(net->doc.net, start).states)
      text += s.to_string() + "\n";
    *out = dup_string(text);
  });
}

int bnc_generate(const char* spec_json, bnc_network** out) {
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec_json ? spec_json : "");
    } catch (const nlohmann::json::exception& e) {
      bnc::raise(bnc::errc::parse_error, std::string("generator spec: ") + e.what());
    }
    bnc::GenSpec spec;
    std::string family = j.value("family", "er");
    if (family == "er")
      spec.family = bnc::GenSpec::Family::erdos_renyi;
    else if (family == "sf")
      spec.family = bnc::GenSpec::Family::scale_free;
    else if (family == "hierarchical")
      spec.family = bnc::GenSpec::Family::hierarchical;
    else if (family == "cactus")
      spec.family = bnc::GenSpec::Family::block_cactus;
    else
      bnc::raise(bnc::errc::invalid_argument, "unknown family " + family);
    spec.n = j.value("n", 0);
    spec.seed = j.value("seed", uint64_t{0});
    spec.sign_prob = j.value("sign_prob", 0.5);
    spec.er_p = j.value("p", 0.3);
    spec.sf_m = j.value("m", 2);
    spec.sf_old_to_new = j.value("old_to_new", false);
    spec.hier_k = j.value("k", 2);
    spec.hier_depth = j.value("depth", 2);
    if (j.contains("blocks")) spec.cactus_blocks = j["blocks"].get<std::vector<int>>();
    spec.tau_value = j.value("tau", 0.0);
    auto* net = new bnc_network{bnc::NetworkDocument{bnc::generate(spec), std::nullopt}};
    *out = net;
  });
}

int bnc_reduce(const bnc_network* net, const char* attractor, const char* method,
               bnc_instance** out) {
  return guarded([&] {
    std::string how = method ? method : "auto";
    bnc::Attractor target = parse_attractor_arg(attractor, net->doc.net.n);
    if (how == "auto" && target.length() > 1) how = "cyclic";
    auto* bundle = new bnc_instance;
    try {
      if (how == "cyclic") {
        bundle->inst = bnc::build_cyclic(net->doc.net, target);
        bundle->coverage = bnc::Coverage::originals;
      } else {
        if (target.length() != 1)
          bnc::raise(bnc::errc::invalid_argument,
                     "method " + how + " targets a fixed point, not a cycle");
        const bnc::State& x_star = target.states[0];
        if (how == "general") {
          bundle->inst = bnc::build_augmented(net->doc.net, x_star);
          bundle->coverage = bnc::Coverage::originals;
        } else if (how == "threshold") {
          bnc::SignedThresholdNet classes;
          bundle->inst = bnc::build_threshold_tss(net->doc.net, x_star, &classes);
          bundle->classes = std::move(classes);
        } else if (how == "nc") {
          bundle->inst = bnc::build_nc_full(net->doc.net, x_star);
          bundle->coverage = bnc::Coverage::originals;
        } else if (how == "nc-unanimous") {
          bundle->inst = bnc::build_nc_unanimous(net->doc.net, x_star);
        } else if (how == "probabilistic") {
          bundle->inst = bnc::merge_probabilistic(net->doc.net, x_star);
          bundle->coverage = bnc::Coverage::originals;
        } else if (how == "probabilistic-threshold") {
          bnc::SignedThresholdNet classes;
          bundle->inst = bnc::merge_probabilistic(net->doc.net, x_star,
                                                  bnc::MergeRoute::threshold, &classes);
          bundle->classes = std::move(classes);
        } else if (how == "auto") {
          try {
            bnc::SignedThresholdNet classes;
            bundle->inst = bnc::build_threshold_tss(net->doc.net, x_star, &classes);
            bundle->classes = std::move(classes);
          } catch (const bnc::Error& e) {
            if (e.code() != bnc::errc::mixed_sign_node &&
                e.code() != bnc::errc::invalid_argument)
              throw;
            bundle->inst = bnc::build_augmented(net->doc.net, x_star);
            bundle->coverage = bnc::Coverage::originals;
          }
        } else {
          bnc::raise(bnc::errc::invalid_argument, "unknown reduction " + how);
        }
      }
    } catch (...) {
      delete bundle;
      throw;
    }
    *out = bundle;
  });
}

int bnc_instance_parse(const char* text, bnc_instance** out) {
  return guarded([&] {
    auto* bundle = new bnc_instance;
    try {
      bundle->inst = bnc::parse_tss(text ? text : "");
    } catch (...) {
      delete bundle;
      throw;
    }
    *out = bundle;
  });
}

int bnc_instance_load(const char* path, bnc_instance** out) {
  return guarded([&] {
    auto* bundle = new bnc_instance;
    try {
      bundle->inst = bnc::parse_tss(slurp(path));
    } catch (...) {
      delete bundle;
      throw;
    }
    *out = bundle;
  });
}

int bnc_instance_serialize(const bnc_instance* inst, char** out) {
  return guarded([&] { *out = dup_string(bnc::serialize_tss(inst->inst)); });
}

int bnc_instance_save(const bnc_instance* inst, const char* path) {
  return guarded([&] { spit(path, bnc::serialize_tss(inst->inst)); });
}

void bnc_instance_release(bnc_instance* inst) { delete inst; }

int bnc_instance_size(const bnc_instance* inst) { return inst->inst.m; }

int bnc_instance_export_ilp(const bnc_instance* inst, char** out) {
  return guarded([&] { *out = dup_string(bnc::export_ilp_string(inst->inst)); });
}

int bnc_solve(const bnc_instance* inst, const char* method, const char* options_json,
              int** out_genes, int* out_count) {
  return guarded([&] {
    std::string how = method ? method : "exact";
    nlohmann::json opts = nlohmann::json::object();
    if (options_json && *options_json) {
      try {
        opts = nlohmann::json::parse(options_json);
      } catch (const nlohmann::json::exception& e) {
        bnc::raise(bnc::errc::parse_error, std::string("solver options: ") + e.what());
      }
    }

    bnc::TargetSet solution;
    if (how == "exact") {
      bnc::ExactOptions eo;
      eo.coverage = inst->coverage;
      eo.candidate_budget = opts.value("budget", eo.candidate_budget);
      solution = bnc::solve_exact(inst->inst, eo);
    } else if (how == "greedy") {
      bnc::GreedyOptions go;
      go.coverage = inst->coverage;
      solution = bnc::solve_greedy(inst->inst, go);
    } else if (how == "nc-fvs") {
      solution = bnc::solve_unanimous_fvs(inst->inst);
    } else if (how == "clique" || how == "cactus" || how == "hierarchy") {
      if (!inst->classes)
        bnc::raise(bnc::errc::invalid_argument,
                   "method " + how + " needs an instance from a threshold reduction");
      if (how == "clique") {
        solution = bnc::solve_clique(inst->inst, *inst->classes);
      } else if (how == "cactus") {
        if (!opts.contains("blocks"))
          bnc::raise(bnc::errc::invalid_argument, "cactus needs a blocks option");
        bnc::CliquePartition partition;
        int next = 0;
        for (int size : opts["blocks"].get<std::vector<int>>()) {
          std::vector<int> block(size);
          for (int& v : block) v = next++;
          partition.blocks.push_back(block);
        }
        solution = bnc::solve_block_cactus(inst->inst, partition, *inst->classes);
      } else {
        if (!opts.contains("k") || !opts.contains("depth"))
          bnc::raise(bnc::errc::invalid_argument, "hierarchy needs k and depth options");
        bnc::HierarchySpec spec{opts["k"].get<int>(), opts["depth"].get<int>(), 0};
        solution = bnc::solve_hierarchical(inst->inst, spec, *inst->classes);
      }
    } else {
      bnc::raise(bnc::errc::invalid_argument, "unknown solver " + how);
    }

    std::vector<int> genes = bnc::target_genes(inst->inst, solution.members);
    *out_genes = dup_ints(genes);
    *out_count = static_cast<int>(genes.size());
  });
}

int bnc_solve_cycle_baseline(const bnc_network* net, int** out_genes, int* out_count) {
  return guarded([&] {
    std::vector<int> genes = bnc::solve_cycle_baseline(net->doc.net).members;
    *out_genes = dup_ints(genes);
    *out_count = static_cast<int>(genes.size());
  });
}

int bnc_certificate(const bnc_instance* inst, const int* genes, int count, char** out_json) {
  return guarded([&] {
    std::vector<int> gene_list(genes, genes + count);
    std::sort(gene_list.begin(), gene_list.end());
    std::vector<int> seed = bnc::gene_seed_nodes(inst->inst, gene_list);
    bnc::CascadeTrace trace = bnc::minimal_certificate(inst->inst, seed, inst->coverage);
    nlohmann::json j;
    j["nodes"] = inst->inst.m;
    j["seed_nodes"] = seed.size();
    j["rounds"] = trace.rounds();
    j["activated"] = trace.fixpoint().size();
    j["goal"] = inst->coverage == bnc::Coverage::originals ? "originals" : "all-nodes";
    *out_json = dup_string(j.dump(2));
  });
}

int bnc_verify(const bnc_network* net, const char* attractor, const int* genes, int count,
               const char* mode, long long trials, uint64_t seed, long long horizon,
               char** out_json) {
  return guarded([&] {
    std::string how = mode ? mode : "exhaustive";
    bnc::Attractor target = parse_attractor_arg(attractor, net->doc.net.n);
    std::vector<int> gene_list(genes, genes + count);
    std::sort(gene_list.begin(), gene_list.end());

    bnc::VerificationReport report;
    if (how == "cyclic") {
      bnc::CyclicVerifyOptions opts;
      opts.exhaustive = trials <= 0;
      if (trials > 0) opts.trials = trials;
      opts.seed = seed;
      if (horizon > 0) opts.horizon = static_cast<int>(horizon);
      report = bnc::verify_cyclic(net->doc.net, target, gene_list, opts);
    } else {
      bnc::InputSet pins = bnc::InputSet::from_target(gene_list, target.states[0]);
      if (how == "exhaustive" || how == "exhaustive-all") {
        bnc::VerifyOptions opts;
        if (horizon > 0) opts.horizon = static_cast<int>(horizon);
        opts.from_all_states = how == "exhaustive-all";
        report = bnc::verify_exhaustive(net->doc.net, target, pins, opts);
      } else {
        bnc::Schedule schedule;
        if (how == "mc")
          schedule = bnc::Schedule::synchronous;
        else if (how == "async")
          schedule = bnc::Schedule::async_uniform;
        else if (how == "async-rr")
          schedule = bnc::Schedule::async_round_robin;
        else if (how == "stochastic")
          schedule = bnc::Schedule::stochastic_uniform;
        else
          bnc::raise(bnc::errc::invalid_argument, "unknown verification mode " + how);
        report = bnc::verify_monte_carlo(net->doc.net, target, pins, schedule, trials, seed,
                                         static_cast<int>(horizon));
      }
    }
    *out_json = dup_string(bnc::report_to_json(report));
  });
}

int bnc_experiment(const char* config_json, char** out_rows_csv, char** out_aggregate_csv) {
  return guarded([&] {
    bnc::ExperimentConfig config =
        bnc::experiment_config_from_json(config_json ? config_json : "");
    bnc::ExperimentResult result = bnc::run_trend_experiment(config);
    *out_rows_csv = dup_string(bnc::rows_csv(result));
    *out_aggregate_csv = dup_string(bnc::aggregate_csv(result));
  });
}

}  // extern "C"
