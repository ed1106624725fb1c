// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bnc/errors.hpp"

namespace bnc {

/// Fixed-width vector of Boolean node states.
class State {
 public:
  State() = default;
  explicit State(int n, bool fill = false)
      : n_(n), words_((n + 63) / 64, fill ? ~0ULL : 0ULL) {
    trim();
  }

  /// Builds a state from a bit string such as "101". Character k of the
  /// string is the state of node k.
  static State from_string(std::string_view bits);

  int size() const { return n_; }

  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

  void set(int i, bool v) {
    uint64_t mask = 1ULL << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::string to_string() const;

  bool operator==(const State&) const = default;
  std::strong_ordering operator<=>(const State& o) const;

  uint64_t hash() const {
    uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<uint64_t>(n_);
    for (uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct StateHash {
  size_t operator()(const State& s) const { return static_cast<size_t>(s.hash()); }
};

/// Control inputs: nodes pinned to fixed Boolean values.
class InputSet {
 public:
  InputSet() = default;

  /// Pins each listed node to its value in x_star.
  static InputSet from_target(const std::vector<int>& nodes, const State& x_star);

  void add(int node, bool value);
  bool contains(int node) const;
  std::optional<bool> value(int node) const;
  bool empty() const { return pins_.empty(); }
  int size() const { return static_cast<int>(pins_.size()); }
  const std::vector<std::pair<int, bool>>& pins() const { return pins_; }
  std::vector<int> nodes() const;

  /// True when `state` matches every pinned value.
  bool agrees(const State& state) const;

  /// Overwrites pinned coordinates of `state` with their pinned values.
  void apply(State& state) const;

 private:
  std::vector<std::pair<int, bool>> pins_;  // sorted by node, unique
};

}  // namespace bnc
