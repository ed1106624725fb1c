// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#include "bnc/state.hpp"

#include <algorithm>

namespace bnc {

State State::from_string(std::string_view bits) {
  State s(static_cast<int>(bits.size()));
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      s.set(static_cast<int>(i), true);
    else if (bits[i] != '0')
      raise(errc::parse_error, "state strings may only contain 0 and 1");
  }
  return s;
}

std::string State::to_string() const {
  std::string out(n_, '0');
  for (int i = 0; i < n_; ++i)
    if (get(i)) out[i] = '1';
  return out;
}

std::strong_ordering State::operator<=>(const State& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  // lexicographic on the bit string, node 0 first
  for (int i = 0; i < n_; ++i) {
    if (auto c = static_cast<int>(get(i)) <=> static_cast<int>(o.get(i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

InputSet InputSet::from_target(const std::vector<int>& nodes, const State& x_star) {
  InputSet s;
  for (int v : nodes) {
    if (v < 0 || v >= x_star.size()) raise(errc::index_out_of_range, "pinned node out of range");
    s.add(v, x_star.get(v));
  }
  return s;
}

void InputSet::add(int node, bool value) {
  auto it = std::lower_bound(pins_.begin(), pins_.end(), node,
                             [](const auto& p, int v) { return p.first < v; });
  if (it != pins_.end() && it->first == node) {
    it->second = value;
    return;
  }
  pins_.insert(it, {node, value});
}

bool InputSet::contains(int node) const { return value(node).has_value(); }

std::optional<bool> InputSet::value(int node) const {
  auto it = std::lower_bound(pins_.begin(), pins_.end(), node,
                             [](const auto& p, int v) { return p.first < v; });
  if (it != pins_.end() && it->first == node) return it->second;
  return std::nullopt;
}

std::vector<int> InputSet::nodes() const {
  std::vector<int> out;
  out.reserve(pins_.size());
  for (const auto& [node, value] : pins_) out.push_back(node);
  return out;
}

bool InputSet::agrees(const State& state) const {
  for (const auto& [node, value] : pins_)
    if (state.get(node) != value) return false;
  return true;
}

void InputSet::apply(State& state) const {
  for (const auto& [node, value] : pins_) state.set(node, value);
}

}  // namespace bnc
