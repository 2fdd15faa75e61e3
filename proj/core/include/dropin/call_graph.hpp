// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dropin/class_model.hpp"

namespace dropin {

/// Intra-class call edges between method keys. Only self-receiver calls can
/// produce an edge; every other call is listed in `unresolved`.
struct CallGraph {
  std::string owner;
  std::set<std::pair<std::string, std::string>> edges;       // caller key -> callee key
  std::set<std::pair<std::string, std::string>> unresolved;  // caller key, callee name

  /// Callee keys of `caller`, ascending.
  std::vector<std::string> callees(const std::string& caller) const;

  bool operator==(const CallGraph&) const = default;
};

CallGraph build_call_graph(const ClassDescriptor& c);

}  // namespace dropin
