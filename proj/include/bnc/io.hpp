// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bnc/log.hpp"
#include "bnc/network.hpp"
#include "bnc/tss.hpp"

namespace bnc {

/// A parsed .bn document: the network plus its optional attractor line.
struct NetworkDocument {
  RegulatoryNetwork net;
  std::optional<Attractor> attractor;
};

/// Parses the .bn network grammar. Rule forms: CONST, TABLE, THRESH, NC,
/// RULESET, and plain Boolean expressions (!, &, ^, |, OR/AND/NOT/XOR),
/// which are canonicalized to truth tables. Errors carry line numbers.
NetworkDocument parse_network(std::string_view text);

/// Canonical serialization; parse(serialize(x)) reproduces x and serialized
/// documents round-trip byte-identically.
std::string serialize_network(const NetworkDocument& doc);

TssInstance parse_tss(std::string_view text);
std::string serialize_tss(const TssInstance& inst);

}  // namespace bnc
