// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Token bags fed to the embedding function.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dropin/call_graph.hpp"
#include "dropin/class_model.hpp"

namespace dropin {

/// A multiset of lowercase words. Order is kept because a class's bag is
/// also its training sentence; consumers that only embed may ignore it.
using TokenBag = std::vector<std::string>;

/// Splits at lower->upper boundaries, letter/digit boundaries, `_` and `$`,
/// then lowercases. "elementData" -> {element, data}; "utf8Len" -> {utf, 8, len}.
std::vector<std::string> split_identifier(std::string_view id);

/// Split names of the class, its fields, and for every method (private ones
/// included, constructors excluded) its name, parameter names and the names
/// it invokes.
TokenBag class_tokens(const ClassDescriptor& c);

struct MethodTokenOptions {
  int inline_depth = 5;
  bool include_own_name = false;
};

/// Invoked names, parameter names, accessed fields and locals of `m`,
/// followed by those of each self callee, inlined depth-first up to
/// `inline_depth` levels. A method already on the current inlining path is
/// not inlined again.
TokenBag method_tokens(const MethodDescriptor& m, const ClassDescriptor& owner, const CallGraph& graph,
                       const MethodTokenOptions& options = {});

}  // namespace dropin
