// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace bnc {

/// Verbosity from ATTRACTOR_CONTROL_LOG (0 silent, 1 info, 2 debug).
int log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace bnc
