// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the Boolean-network control library. Talks to
// the shared library exclusively through the C interface in bnc.h.
//
// Exit codes: 0 success, 1 domain/input error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bnc.h"

namespace {

struct CStr {
  char* ptr = nullptr;
  ~CStr() { bnc_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct CInts {
  int* ptr = nullptr;
  int count = 0;
  ~CInts() { bnc_free(ptr); }
  std::vector<int> vec() const { return std::vector<int>(ptr, ptr + count); }
};

struct NetworkHandle {
  bnc_network* ptr = nullptr;
  ~NetworkHandle() { bnc_network_release(ptr); }
};

struct InstanceHandle {
  bnc_instance* ptr = nullptr;
  ~InstanceHandle() { bnc_instance_release(ptr); }
};

[[noreturn]] void fail(const std::string& msg, int code = 1) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

void check(int status) {
  if (status != BNC_OK) fail(bnc_last_error());
}

bool ends_with(const std::string& name, const std::string& suffix) {
  return name.size() >= suffix.size() &&
         name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void load_network(const std::string& path, NetworkHandle& net) {
  check(bnc_network_load(path.c_str(), &net.ptr));
}

// attractor from the flag or from the document's own attractor line
std::string resolve_attractor(const bnc_network* net, const std::string& flag) {
  if (!flag.empty()) return flag;
  CStr hint;
  check(bnc_network_attractor_hint(net, &hint.ptr));
  if (hint.ptr == nullptr)
    fail("no attractor given; pass --attractor or add an attractor line to the document");
  return hint.str();
}

std::vector<int> parse_inputs(const bnc_network* net, const std::string& csv) {
  std::vector<int> nodes;
  std::istringstream in(csv);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    int v = bnc_network_node_index(net, name.c_str());
    if (v < 0) fail("unknown node " + name);
    nodes.push_back(v);
  }
  return nodes;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << text;
}

std::string gene_names(const bnc_network* net, const std::vector<int>& genes) {
  std::string out = "{";
  for (size_t i = 0; i < genes.size(); ++i) {
    CStr name;
    check(bnc_network_node_name(net, genes[i], &name.ptr));
    out += (i ? ", " : "") + name.str();
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attractor control for Boolean regulatory networks"};
  app.require_subcommand(1);

  // ---- attractor ----
  auto* attractor_cmd = app.add_subcommand("attractor", "find fixed points or follow a trajectory");
  std::string attractor_net, attractor_from;
  int attractor_limit = 64;
  attractor_cmd->add_option("network", attractor_net, "network file (.bn)")->required();
  attractor_cmd->add_option("--from", attractor_from, "initial state bits; follows its trajectory");
  attractor_cmd->add_option("--limit", attractor_limit, "fixed-point cap");

  // ---- reduce ----
  auto* reduce_cmd = app.add_subcommand("reduce", "build the cascade instance for a target");
  std::string reduce_net, reduce_method = "auto", reduce_attractor, reduce_out;
  bool reduce_via_threshold = false;
  reduce_cmd->add_option("network", reduce_net, "network file (.bn)")->required();
  reduce_cmd
      ->add_option("--method", reduce_method,
                   "general|threshold|nc|nc-unanimous|cyclic|probabilistic|auto")
      ->capture_default_str();
  reduce_cmd->add_option("--attractor", reduce_attractor, "target state(s), e.g. 111 or \"01 10\"");
  reduce_cmd->add_flag("--via-threshold", reduce_via_threshold,
                       "route the probabilistic merge through the threshold reduction");
  reduce_cmd->add_option("--out", reduce_out, "output instance file (.tss), defaults to stdout");

  // ---- solve ----
  auto* solve_cmd = app.add_subcommand("solve", "choose control inputs");
  std::string solve_input, solve_method = "exact", solve_attractor, solve_reduction = "auto";
  std::string solve_blocks;
  int solve_budget = 25, solve_k = 0, solve_depth = 0;
  solve_cmd->add_option("input", solve_input, "network (.bn) or instance (.tss)")->required();
  solve_cmd
      ->add_option("--method", solve_method,
                   "exact|greedy|clique|cactus|hierarchy|nc-fvs|cycle-baseline")
      ->capture_default_str();
  solve_cmd->add_option("--attractor", solve_attractor, "target state (network inputs only)");
  solve_cmd->add_option("--reduction", solve_reduction,
                        "reduction for network inputs (see reduce --method)");
  solve_cmd->add_option("--budget", solve_budget, "exact-search candidate cap");
  solve_cmd->add_option("--blocks", solve_blocks, "comma-separated block sizes (cactus)");
  solve_cmd->add_option("--k", solve_k, "copies per level (hierarchy)");
  solve_cmd->add_option("--depth", solve_depth, "levels (hierarchy)");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "check convergence under pinned inputs");
  std::string verify_net, verify_mode = "exhaustive", verify_attractor, verify_inputs;
  long long verify_trials = 0, verify_horizon = 0;
  uint64_t verify_seed = 0;
  bool verify_seed_set = false;
  verify_cmd->add_option("network", verify_net, "network file (.bn)")->required();
  verify_cmd->add_option("--mode", verify_mode, "exhaustive|exhaustive-all|mc|async|async-rr|stochastic|cyclic")
      ->capture_default_str();
  verify_cmd->add_option("--attractor", verify_attractor, "target state(s)");
  verify_cmd->add_option("--inputs", verify_inputs, "comma-separated pinned node names")
      ->required();
  verify_cmd->add_option("--trials", verify_trials, "sampled trials (0 = exhaustive for cyclic)");
  verify_cmd->add_option("--seed", verify_seed, "random seed")->each([&](const std::string&) {
    verify_seed_set = true;
  });
  verify_cmd->add_option("--horizon", verify_horizon, "step cap per trajectory");

  // ---- generate ----
  auto* generate_cmd = app.add_subcommand("generate", "draw a random threshold network");
  std::string gen_family, gen_blocks, gen_out;
  int gen_n = 0, gen_m = 2, gen_k = 2, gen_depth = 2;
  double gen_p = 0.3, gen_sign = 0.5, gen_tau = 0.0;
  uint64_t gen_seed = 0;
  bool gen_seed_set = false;
  generate_cmd->add_option("--family", gen_family, "er|sf|hierarchical|cactus")->required();
  generate_cmd->add_option("-n,--nodes", gen_n, "node count")->required();
  generate_cmd->add_option("--seed", gen_seed, "random seed")->each([&](const std::string&) {
    gen_seed_set = true;
  });
  generate_cmd->add_option("--p", gen_p, "edge probability (er)");
  generate_cmd->add_option("--m", gen_m, "edges per new node (sf)");
  generate_cmd->add_option("--k", gen_k, "copies per level (hierarchical)");
  generate_cmd->add_option("--depth", gen_depth, "levels (hierarchical)");
  generate_cmd->add_option("--blocks", gen_blocks, "comma-separated block sizes (cactus)");
  generate_cmd->add_option("--sign-prob", gen_sign, "probability a node is excitatory");
  generate_cmd->add_option("--tau", gen_tau, "constant threshold");
  generate_cmd->add_option("--out", gen_out, "output network file, defaults to stdout");

  // ---- experiment ----
  auto* experiment_cmd = app.add_subcommand("experiment", "run the trend-experiment harness");
  std::string exp_config, exp_out, exp_aggregate;
  experiment_cmd->add_option("--config", exp_config, "experiment configuration (JSON file)")
      ->required();
  experiment_cmd->add_option("--out", exp_out, "per-trial rows CSV")->required();
  experiment_cmd->add_option("--aggregate", exp_aggregate, "aggregate CSV");

  // ---- export-ilp ----
  auto* ilp_cmd = app.add_subcommand("export-ilp", "write the integer program (LP format)");
  std::string ilp_input, ilp_attractor, ilp_reduction = "auto", ilp_out;
  ilp_cmd->add_option("input", ilp_input, "network (.bn) or instance (.tss)")->required();
  ilp_cmd->add_option("--attractor", ilp_attractor, "target state (network inputs only)");
  ilp_cmd->add_option("--reduction", ilp_reduction, "reduction for network inputs");
  ilp_cmd->add_option("--out", ilp_out, "output file (.lp), defaults to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  if (attractor_cmd->parsed()) {
    NetworkHandle net;
    load_network(attractor_net, net);
    CStr out;
    if (!attractor_from.empty()) {
      check(bnc_network_attractor_from(net.ptr, attractor_from.c_str(), &out.ptr));
      std::cout << "attractor reached from " << attractor_from << ":\n" << out.str();
    } else {
      check(bnc_network_fixed_points(net.ptr, attractor_limit, &out.ptr));
      std::string text = out.str();
      int count = 0;
      for (char c : text)
        if (c == '\n') ++count;
      std::cout << count << " fixed point" << (count == 1 ? "" : "s") << "\n" << text;
    }
    return 0;
  }

  if (reduce_cmd->parsed()) {
    NetworkHandle net;
    load_network(reduce_net, net);
    std::string attractor = resolve_attractor(net.ptr, reduce_attractor);
    std::string method = reduce_method;
    if (method == "probabilistic" && reduce_via_threshold) method = "probabilistic-threshold";
    InstanceHandle inst;
    check(bnc_reduce(net.ptr, attractor.c_str(), method.c_str(), &inst.ptr));
    CStr text;
    check(bnc_instance_serialize(inst.ptr, &text.ptr));
    write_output(reduce_out, text.str());
    std::cerr << "instance with " << bnc_instance_size(inst.ptr) << " nodes\n";
    return 0;
  }

  if (solve_cmd->parsed()) {
    std::ostringstream options;
    options << "{\"budget\":" << solve_budget;
    if (solve_k > 0) options << ",\"k\":" << solve_k << ",\"depth\":" << solve_depth;
    if (!solve_blocks.empty()) {
      options << ",\"blocks\":[";
      std::istringstream in(solve_blocks);
      std::string item;
      bool first = true;
      while (std::getline(in, item, ',')) {
        options << (first ? "" : ",") << item;
        first = false;
      }
      options << "]";
    }
    options << "}";

    if (ends_with(solve_input, ".tss")) {
      if (solve_method == "cycle-baseline") fail("cycle-baseline needs a network input", 2);
      InstanceHandle inst;
      check(bnc_instance_load(solve_input.c_str(), &inst.ptr));
      CInts genes;
      check(bnc_solve(inst.ptr, solve_method.c_str(), options.str().c_str(), &genes.ptr,
                      &genes.count));
      std::cout << "S = {";
      std::vector<int> list = genes.vec();
      for (size_t i = 0; i < list.size(); ++i)
        std::cout << (i ? ", " : "") << (list[i] + 1);
      std::cout << "}\n";
      CStr cert;
      check(bnc_certificate(inst.ptr, genes.ptr, genes.count, &cert.ptr));
      std::cout << cert.str() << "\n";
      return 0;
    }

    NetworkHandle net;
    load_network(solve_input, net);
    if (solve_method == "cycle-baseline") {
      CInts genes;
      check(bnc_solve_cycle_baseline(net.ptr, &genes.ptr, &genes.count));
      std::cout << "S = " << gene_names(net.ptr, genes.vec()) << "\n";
      return 0;
    }
    std::string attractor = resolve_attractor(net.ptr, solve_attractor);
    std::string reduction = solve_reduction;
    if (reduction == "auto") {
      if (solve_method == "clique" || solve_method == "cactus" || solve_method == "hierarchy")
        reduction = "threshold";
      else if (solve_method == "nc-fvs")
        reduction = "nc-unanimous";
    }
    InstanceHandle inst;
    check(bnc_reduce(net.ptr, attractor.c_str(), reduction.c_str(), &inst.ptr));
    CInts genes;
    check(bnc_solve(inst.ptr, solve_method.c_str(), options.str().c_str(), &genes.ptr,
                    &genes.count));
    std::cout << "S = " << gene_names(net.ptr, genes.vec()) << "\n";
    CStr cert;
    check(bnc_certificate(inst.ptr, genes.ptr, genes.count, &cert.ptr));
    std::cout << cert.str() << "\n";
    return 0;
  }

  if (verify_cmd->parsed()) {
    NetworkHandle net;
    load_network(verify_net, net);
    std::string attractor = resolve_attractor(net.ptr, verify_attractor);
    std::vector<int> inputs = parse_inputs(net.ptr, verify_inputs);
    bool randomized = verify_mode.rfind("exhaustive", 0) != 0 &&
                      !(verify_mode == "cyclic" && verify_trials == 0);
    if (randomized && !verify_seed_set) fail("randomized verification requires --seed", 2);
    if (randomized && verify_mode != "cyclic" && verify_trials <= 0)
      fail("sampled verification requires --trials", 2);
    CStr report;
    check(bnc_verify(net.ptr, attractor.c_str(), inputs.data(),
                     static_cast<int>(inputs.size()), verify_mode.c_str(), verify_trials,
                     verify_seed, verify_horizon, &report.ptr));
    std::string json = report.str();
    // headline line, then the full report
    auto grab = [&](const std::string& key) {
      size_t at = json.find("\"" + key + "\"");
      if (at == std::string::npos) return std::string("?");
      at = json.find(':', at);
      size_t end = json.find_first_of(",\n}", at);
      std::string value = json.substr(at + 1, end - at - 1);
      value.erase(0, value.find_first_not_of(' '));
      return value;
    };
    std::cout << grab("converged") << "/" << grab("trials") << " converged\n" << json << "\n";
    return 0;
  }

  if (generate_cmd->parsed()) {
    if (!gen_seed_set) fail("generate requires --seed", 2);
    std::ostringstream spec;
    spec << "{\"family\":\"" << gen_family << "\",\"n\":" << gen_n << ",\"seed\":" << gen_seed
         << ",\"p\":" << gen_p << ",\"m\":" << gen_m << ",\"k\":" << gen_k
         << ",\"depth\":" << gen_depth << ",\"sign_prob\":" << gen_sign << ",\"tau\":" << gen_tau;
    if (!gen_blocks.empty()) {
      spec << ",\"blocks\":[";
      std::istringstream in(gen_blocks);
      std::string item;
      bool first = true;
      while (std::getline(in, item, ',')) {
        spec << (first ? "" : ",") << item;
        first = false;
      }
      spec << "]";
    }
    spec << "}";
    NetworkHandle net;
    check(bnc_generate(spec.str().c_str(), &net.ptr));
    CStr text;
    check(bnc_network_serialize(net.ptr, &text.ptr));
    write_output(gen_out, text.str());
    return 0;
  }

  if (experiment_cmd->parsed()) {
    std::ifstream in(exp_config, std::ios::binary);
    if (!in) fail("cannot open " + exp_config);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CStr rows, aggregate;
    check(bnc_experiment(buffer.str().c_str(), &rows.ptr, &aggregate.ptr));
    write_output(exp_out, rows.str());
    if (!exp_aggregate.empty()) write_output(exp_aggregate, aggregate.str());
    std::cout << aggregate.str();
    return 0;
  }

  if (ilp_cmd->parsed()) {
    InstanceHandle inst;
    if (ends_with(ilp_input, ".tss")) {
      check(bnc_instance_load(ilp_input.c_str(), &inst.ptr));
    } else {
      NetworkHandle net;
      load_network(ilp_input, net);
      std::string attractor = resolve_attractor(net.ptr, ilp_attractor);
      check(bnc_reduce(net.ptr, attractor.c_str(), ilp_reduction.c_str(), &inst.ptr));
    }
    CStr text;
    check(bnc_instance_export_ilp(inst.ptr, &text.ptr));
    write_output(ilp_out, text.str());
    return 0;
  }

  return 2;
}
