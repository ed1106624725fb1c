// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "bnc/io.hpp"
#include "bnc/reduction.hpp"
#include "bnc/rng.hpp"
#include "bnc/verify.hpp"
#include "json.hpp"

namespace bnc {

namespace {

struct Sample {
  RegulatoryNetwork net;
  State x_star;
};

// Draws networks until one has a fixed point; the retry chain is a pure
// function of the cell seed.
Sample draw_sample(GenSpec spec, const Rng& cell, const ExperimentConfig& config) {
  for (int attempt = 0; attempt < config.generation_retries; ++attempt) {
    spec.seed = cell.fork(static_cast<uint64_t>(attempt)).next();
    RegulatoryNetwork net = generate(spec);
    FixedPointOptions opts;
    opts.limit = 1;
    opts.prefer_ones = config.ones_target;
    std::vector<State> points = find_fixed_points(net, opts);
    if (!points.empty()) return {std::move(net), std::move(points.front())};
  }
  raise(errc::no_fixed_point, "no generated network had a fixed point");
}

std::vector<int> solve_cell(const std::string& solver, const Sample& sample,
                            const ExperimentConfig& config) {
  if (solver == "cycle-baseline") return solve_cycle_baseline(sample.net).members;
  TssInstance inst = build_threshold_tss(sample.net, sample.x_star);
  for (int v = 0; v < inst.m; ++v) inst.tau[v] = std::max(inst.tau[v], config.min_threshold);
  if (solver == "tss-exact") {
    ExactOptions opts;
    opts.candidate_budget = config.exact_budget;
    opts.coverage = Coverage::originals;
    return solve_exact(inst, opts).members;
  }
  if (solver == "tss-greedy") {
    GreedyOptions opts;
    opts.coverage = Coverage::originals;
    return solve_greedy(inst, opts).members;
  }
  raise(errc::invalid_argument, "unknown solver " + solver);
}

}  // namespace

ExperimentResult run_trend_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  Rng master(config.seed);

  for (size_t fi = 0; fi < config.families.size(); ++fi) {
    for (size_t si = 0; si < config.sizes.size(); ++si) {
      log_info("experiment cell " + config.families[fi].family_name() + " n=" +
               std::to_string(config.sizes[si]));
      for (int trial = 0; trial < config.trials; ++trial) {
        GenSpec spec = config.families[fi];
        spec.n = config.sizes[si];
        uint64_t cell_id = (fi * 1009 + si) * 7919 + static_cast<uint64_t>(trial);
        Rng cell = master.fork(cell_id);

        Sample sample;
        std::string generation_error;
        try {
          sample = draw_sample(spec, cell, config);
        } catch (const Error& e) {
          generation_error = e.what();
        }

        for (const std::string& solver : config.solvers) {
          ExperimentRow row;
          row.family = spec.family_name();
          row.n = spec.n;
          row.param = spec.param();
          row.solver = solver;
          row.trial = trial;
          if (!generation_error.empty()) {
            row.error = generation_error;
            result.rows.push_back(row);
            continue;
          }
          try {
            auto start = std::chrono::steady_clock::now();
            std::vector<int> genes = solve_cell(solver, sample, config);
            auto stop = std::chrono::steady_clock::now();
            row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            row.input_count = static_cast<int>(genes.size());

            InputSet pins = InputSet::from_target(genes, sample.x_star);
            Attractor target{{sample.x_star}};
            int free = spec.n - static_cast<int>(genes.size());
            VerificationReport report;
            if (free <= config.exhaustive_free_limit) {
              report = verify_exhaustive(sample.net, target, pins);
            } else {
              report = verify_monte_carlo(sample.net, target, pins, Schedule::synchronous,
                                          config.verify_trials, cell.fork(0xFEED).next());
            }
            row.verified = report.all_converged();
          } catch (const Error& e) {
            row.error = e.what();
            row.input_count = -1;
            log_info("cell error (" + row.family + " n=" + std::to_string(row.n) + " " +
                     solver + "): " + row.error);
          }
          result.rows.push_back(row);
        }
      }
    }
  }
  return result;
}

namespace {

std::string fmt_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

std::string rows_csv(const ExperimentResult& result) {
  std::string out = "family,n,param,solver,trial,input_count,runtime_ms,verified\n";
  for (const auto& row : result.rows) {
    out += row.family + "," + std::to_string(row.n) + "," + fmt_double(row.param) + "," +
           row.solver + "," + std::to_string(row.trial) + "," + std::to_string(row.input_count) +
           "," + fmt_double(row.runtime_ms) + "," + (row.verified ? "1" : "0") + "\n";
  }
  return out;
}

std::string aggregate_csv(const ExperimentResult& result) {
  struct Cell {
    std::vector<double> inputs;
    double runtime = 0.0;
    int verified = 0;
    int errors = 0;
  };
  std::map<std::tuple<std::string, int, double, std::string>, Cell> cells;
  for (const auto& row : result.rows) {
    Cell& cell = cells[{row.family, row.n, row.param, row.solver}];
    if (row.input_count < 0) {
      ++cell.errors;
      continue;
    }
    cell.inputs.push_back(row.input_count);
    cell.runtime += row.runtime_ms;
    cell.verified += row.verified ? 1 : 0;
  }
  std::string out =
      "family,n,param,solver,trials,mean_inputs,std_inputs,mean_runtime_ms,verified_fraction,"
      "errors\n";
  for (const auto& [key, cell] : cells) {
    const auto& [family, n, param, solver] = key;
    double mean = 0.0, sd = 0.0;
    size_t k = cell.inputs.size();
    for (double v : cell.inputs) mean += v;
    if (k > 0) mean /= static_cast<double>(k);
    for (double v : cell.inputs) sd += (v - mean) * (v - mean);
    sd = k > 1 ? std::sqrt(sd / static_cast<double>(k - 1)) : 0.0;
    out += family + "," + std::to_string(n) + "," + fmt_double(param) + "," + solver + "," +
           std::to_string(k) + "," + fmt_double(mean) + "," + fmt_double(sd) + "," +
           fmt_double(k > 0 ? cell.runtime / static_cast<double>(k) : 0.0) + "," +
           fmt_double(k > 0 ? static_cast<double>(cell.verified) / static_cast<double>(k) : 0.0) +
           "," + std::to_string(cell.errors) + "\n";
  }
  return out;
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(errc::parse_error, std::string("experiment config: ") + e.what());
  }
  ExperimentConfig config;
  try {
    for (const auto& fam : j.at("families")) {
      GenSpec spec;
      std::string name = fam.at("family").get<std::string>();
      if (name == "er") {
        spec.family = GenSpec::Family::erdos_renyi;
        if (fam.contains("p")) spec.er_p = fam["p"].get<double>();
      } else if (name == "sf") {
        spec.family = GenSpec::Family::scale_free;
        if (fam.contains("m")) spec.sf_m = fam["m"].get<int>();
      } else if (name == "hierarchical") {
        spec.family = GenSpec::Family::hierarchical;
        if (fam.contains("k")) spec.hier_k = fam["k"].get<int>();
        if (fam.contains("depth")) spec.hier_depth = fam["depth"].get<int>();
      } else if (name == "cactus") {
        spec.family = GenSpec::Family::block_cactus;
        if (fam.contains("blocks"))
          spec.cactus_blocks = fam["blocks"].get<std::vector<int>>();
      } else {
        raise(errc::parse_error, "unknown family " + name);
      }
      if (fam.contains("sign_prob")) spec.sign_prob = fam["sign_prob"].get<double>();
      if (fam.contains("tau")) spec.tau_value = fam["tau"].get<double>();
      if (fam.contains("old_to_new")) spec.sf_old_to_new = fam["old_to_new"].get<bool>();
      config.families.push_back(spec);
    }
    config.sizes = j.at("sizes").get<std::vector<int>>();
    config.solvers = j.at("solvers").get<std::vector<std::string>>();
    if (j.contains("trials")) config.trials = j["trials"].get<int>();
    config.seed = j.at("seed").get<uint64_t>();  // randomized runs must be seeded explicitly
    if (j.contains("verify_trials")) config.verify_trials = j["verify_trials"].get<long long>();
    if (j.contains("exact_budget")) config.exact_budget = j["exact_budget"].get<int>();
    if (j.contains("ones_target")) config.ones_target = j["ones_target"].get<bool>();
    if (j.contains("min_threshold")) config.min_threshold = j["min_threshold"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    raise(errc::parse_error, std::string("experiment config: ") + e.what());
  }
  return config;
}

}  // namespace bnc
