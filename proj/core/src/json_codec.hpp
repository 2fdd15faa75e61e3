// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// nlohmann::json conversions for the class model. Private to dropin_core.

#pragma once

#include <json.hpp>

#include "dropin/class_model.hpp"

namespace dropin::codec {

using Json = nlohmann::json;

Json to_json(const TypeRef& t);
TypeRef type_from_json(const Json& j);

Json to_json(const ClassDescriptor& c);
ClassDescriptor class_from_json(const Json& j);

/// Compact, key-sorted, UTF-8 serialization used by every line-oriented
/// format in the project.
inline std::string dump_line(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::strict); }

}  // namespace dropin::codec
