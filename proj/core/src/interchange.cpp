// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/interchange.hpp"

#include "dropin/error.hpp"
#include "json_codec.hpp"

namespace dropin {

namespace codec {

namespace {

std::string_view kind_name(TypeKind k) {
  switch (k) {
    case TypeKind::kPrimitive:
      return "primitive";
    case TypeKind::kClass:
      return "class";
    case TypeKind::kTypeVariable:
      return "type-variable";
    case TypeKind::kArray:
      return "array";
  }
  return "class";
}

TypeKind kind_from(const std::string& s) {
  if (s == "primitive") return TypeKind::kPrimitive;
  if (s == "class") return TypeKind::kClass;
  if (s == "type-variable") return TypeKind::kTypeVariable;
  if (s == "array") return TypeKind::kArray;
  throw std::invalid_argument("unknown type kind '" + s + "'");
}

Visibility visibility_from(const std::string& s) {
  if (s == "public") return Visibility::kPublic;
  if (s == "protected") return Visibility::kProtected;
  if (s == "package") return Visibility::kPackage;
  if (s == "private") return Visibility::kPrivate;
  throw std::invalid_argument("unknown visibility '" + s + "'");
}

Json field_to_json(const FieldDescriptor& f) {
  return Json{{"name", f.name},
              {"type", to_json(f.type)},
              {"is_static", f.is_static},
              {"is_final", f.is_final},
              {"visibility", std::string(to_string(f.visibility))}};
}

Json method_to_json(const MethodDescriptor& m) {
  Json params = Json::array();
  for (const auto& p : m.parameters) params.push_back({{"name", p.name}, {"type", to_json(p.type)}});
  Json calls = Json::array();
  for (const auto& inv : m.invoked_methods) {
    calls.push_back({{"callee", inv.callee},
                     {"arg_count", inv.arg_count},
                     {"receiver", inv.receiver == Receiver::kSelf ? "self" : "other"}});
  }
  return Json{{"name", m.name},
              {"parameters", std::move(params)},
              {"return_type", to_json(m.return_type)},
              {"visibility", std::string(to_string(m.visibility))},
              {"is_static", m.is_static},
              {"body_tokens", m.body_tokens},
              {"invoked_methods", std::move(calls)},
              {"fields_read", Json(std::vector<std::string>(m.fields_read.begin(), m.fields_read.end()))},
              {"fields_written", Json(std::vector<std::string>(m.fields_written.begin(), m.fields_written.end()))},
              {"local_variables", m.local_variables}};
}

FieldDescriptor field_from_json(const Json& j) {
  FieldDescriptor f;
  f.name = j.at("name").get<std::string>();
  f.type = type_from_json(j.at("type"));
  f.is_static = j.at("is_static").get<bool>();
  f.is_final = j.at("is_final").get<bool>();
  f.visibility = visibility_from(j.at("visibility").get<std::string>());
  return f;
}

MethodDescriptor method_from_json(const Json& j) {
  MethodDescriptor m;
  m.name = j.at("name").get<std::string>();
  for (const auto& p : j.at("parameters"))
    m.parameters.push_back({p.at("name").get<std::string>(), type_from_json(p.at("type"))});
  m.return_type = type_from_json(j.at("return_type"));
  m.visibility = visibility_from(j.at("visibility").get<std::string>());
  m.is_static = j.at("is_static").get<bool>();
  m.body_tokens = j.at("body_tokens").get<std::vector<std::string>>();
  for (const auto& inv : j.at("invoked_methods")) {
    const auto receiver = inv.at("receiver").get<std::string>();
    if (receiver != "self" && receiver != "other") throw std::invalid_argument("unknown receiver '" + receiver + "'");
    m.invoked_methods.push_back({inv.at("callee").get<std::string>(), inv.at("arg_count").get<int>(),
                                 receiver == "self" ? Receiver::kSelf : Receiver::kOther});
  }
  for (const auto& f : j.at("fields_read")) m.fields_read.insert(f.get<std::string>());
  for (const auto& f : j.at("fields_written")) m.fields_written.insert(f.get<std::string>());
  m.local_variables = j.at("local_variables").get<std::vector<std::string>>();
  return m;
}

}  // namespace

Json to_json(const TypeRef& t) {
  if (t.is_array()) {
    return Json{{"kind", "array"}, {"dimensions", t.dimensions}, {"element", to_json(t.element())}};
  }
  return Json{{"kind", std::string(kind_name(t.kind))}, {"name", t.name}};
}

TypeRef type_from_json(const Json& j) {
  const TypeKind kind = kind_from(j.at("kind").get<std::string>());
  if (kind == TypeKind::kArray) {
    const int dims = j.at("dimensions").get<int>();
    TypeRef elem = type_from_json(j.at("element"));
    if (elem.is_array()) throw std::invalid_argument("nested array element");
    TypeRef t = TypeRef::array_of(elem, dims);
    return t;
  }
  TypeRef t;
  t.kind = kind;
  t.name = j.at("name").get<std::string>();
  return t;
}

Json to_json(const ClassDescriptor& c) {
  Json fields = Json::array();
  for (const auto& f : c.fields) fields.push_back(field_to_json(f));
  Json methods = Json::array();
  for (const auto& m : c.methods) methods.push_back(method_to_json(m));
  return Json{{"qualified_name", c.qualified_name},
              {"simple_name", c.simple_name},
              {"type_parameters", c.type_parameters},
              {"supertypes", c.supertypes},
              {"fields", std::move(fields)},
              {"methods", std::move(methods)},
              {"source_id", c.source_id}};
}

ClassDescriptor class_from_json(const Json& j) {
  ClassDescriptor c;
  c.qualified_name = j.at("qualified_name").get<std::string>();
  c.simple_name = j.at("simple_name").get<std::string>();
  c.type_parameters = j.at("type_parameters").get<std::vector<std::string>>();
  c.supertypes = j.at("supertypes").get<std::vector<std::string>>();
  for (const auto& f : j.at("fields")) c.fields.push_back(field_from_json(f));
  for (const auto& m : j.at("methods")) c.methods.push_back(method_from_json(m));
  c.source_id = j.at("source_id").get<std::string>();
  return c;
}

}  // namespace codec

std::vector<ClassDescriptor> load_interchange(std::string_view bytes) {
  std::vector<ClassDescriptor> out;
  bool seen_header = false;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t line_start = pos;
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    codec::Json j;
    try {
      j = codec::Json::parse(line);
    } catch (const codec::Json::parse_error& e) {
      const std::size_t col = e.byte > 0 ? e.byte - 1 : 0;
      throw MalformedInput(line_start + col, "line " + std::to_string(line_no) + ": invalid JSON");
    }
    if (!j.is_object()) throw MalformedInput(line_start, "line " + std::to_string(line_no) + ": expected an object");

    if (!seen_header) {
      if (!j.contains("format") || j["format"] != kInterchangeFormat)
        throw MalformedInput(line_start, "missing cf-class header");
      const auto& version = j.contains("version") ? j["version"] : codec::Json();
      if (!version.is_number_integer() || version.get<int>() != kInterchangeVersion)
        throw Error(ErrorKind::kVersionMismatch, "cf-class version " + version.dump() + " is not supported (expected " +
                                                     std::to_string(kInterchangeVersion) + ")");
      seen_header = true;
      continue;
    }

    ClassDescriptor c;
    try {
      c = codec::class_from_json(j);
    } catch (const std::exception& e) {
      throw MalformedInput(line_start, "line " + std::to_string(line_no) + ": " + e.what());
    }
    const auto violations = validate_descriptor(c);
    if (!violations.empty()) {
      throw Error(ErrorKind::kInvalidDescriptor, "line " + std::to_string(line_no) + ": " + violations.front().element +
                                                     ": " + violations.front().message);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string save_interchange(std::span<const ClassDescriptor> classes) {
  std::string out =
      codec::dump_line(codec::Json{{"format", std::string(kInterchangeFormat)}, {"version", kInterchangeVersion}});
  out += '\n';
  for (const auto& c : classes) {
    const auto violations = validate_descriptor(c);
    if (!violations.empty()) {
      throw Error(ErrorKind::kInvalidDescriptor,
                  c.qualified_name + ": " + violations.front().element + ": " + violations.front().message);
    }
    out += codec::dump_line(codec::to_json(c));
    out += '\n';
  }
  return out;
}

}  // namespace dropin
