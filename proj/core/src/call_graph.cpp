// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/call_graph.hpp"

namespace dropin {

std::vector<std::string> CallGraph::callees(const std::string& caller) const {
  std::vector<std::string> out;
  for (auto it = edges.lower_bound({caller, std::string()}); it != edges.end() && it->first == caller; ++it)
    out.push_back(it->second);
  return out;
}

CallGraph build_call_graph(const ClassDescriptor& c) {
  CallGraph g;
  g.owner = c.qualified_name;
  for (const auto& m : c.methods) {
    const std::string caller = method_key(m);
    for (const auto& inv : m.invoked_methods) {
      bool matched = false;
      if (inv.receiver == Receiver::kSelf) {
        // Every overload with the right arity is a possible target; argument
        // types are not known at this level.
        for (const auto& target : c.methods) {
          if (target.name == inv.callee && static_cast<int>(target.parameters.size()) == inv.arg_count) {
            g.edges.emplace(caller, method_key(target));
            matched = true;
          }
        }
      }
      if (!matched) g.unresolved.emplace(caller, inv.callee);
    }
  }
  return g;
}

}  // namespace dropin
