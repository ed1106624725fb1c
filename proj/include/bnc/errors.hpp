// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bnc {

/// Error categories surfaced by the library. The C API maps these onto
/// integer status codes; the CLI maps them onto exit codes.
enum class errc {
  none = 0,
  parse_error,
  invalid_argument,
  index_out_of_range,
  dimension_mismatch,
  invalid_alternative,
  search_budget_exceeded,
  not_a_fixed_point,
  fan_in_too_large,
  infeasible,
  budget_exceeded,
  not_a_target_set,
  mixed_sign_node,
  no_canalyzing_rank,
  invalid_attractor,
  attractor_not_common_fixed_point,
  not_a_clique_instance,
  not_a_clique_partition,
  not_a_tree,
  not_hierarchical,
  no_fixed_point,
  too_large,
  pin_mismatch,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace bnc
