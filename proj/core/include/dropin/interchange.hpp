// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Line-delimited class interchange ("cf-class", version 1).
//
//   {"format":"cf-class","version":1}
//   {"fields":[...],"methods":[...],"qualified_name":"...",...}
//   ...
//
// One class per line, UTF-8, object keys sorted, arrays in declaration order.
// Saving is deterministic, so save(load(x)) is the canonical form of x.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dropin/class_model.hpp"

namespace dropin {

inline constexpr std::string_view kInterchangeFormat = "cf-class";
inline constexpr int kInterchangeVersion = 1;

/// Throws MalformedInput (with byte offset) on bad syntax or schema,
/// Error{kVersionMismatch} on an unknown version, and
/// Error{kInvalidDescriptor} when a record violates a class-model invariant.
std::vector<ClassDescriptor> load_interchange(std::string_view bytes);

/// Throws Error{kInvalidDescriptor} if any descriptor fails validation.
std::string save_interchange(std::span<const ClassDescriptor> classes);

}  // namespace dropin
