// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/class_model.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace dropin {

namespace {

constexpr std::array<std::string_view, 9> kPrimitiveNames = {"boolean", "byte",  "short",  "char", "int",
                                                             "long",    "float", "double", "void"};

void check_type(const TypeRef& t, const std::string& element, bool allow_void, std::vector<Violation>& out) {
  auto bad = [&](std::string msg) { out.push_back({element, std::move(msg)}); };
  switch (t.kind) {
    case TypeKind::kPrimitive:
      if (!is_primitive_name(t.name)) bad("'" + t.name + "' is not a primitive type");
      if (t.name == "void" && !allow_void) bad("void is only valid as a return type");
      break;
    case TypeKind::kClass:
      if (t.name.empty()) bad("class type has an empty name");
      break;
    case TypeKind::kTypeVariable:
      if (t.name.empty()) bad("type variable has an empty name");
      break;
    case TypeKind::kArray:
      if (t.dimensions < 1) bad("array dimension must be >= 1");
      if (t.element_kind == TypeKind::kArray) bad("array element kind must not be an array");
      check_type(t.element(), element, false, out);
      break;
  }
  if (t.kind != TypeKind::kArray && t.dimensions != 0) bad("non-array type carries dimensions");
}

}  // namespace

TypeRef TypeRef::primitive(std::string name) {
  return TypeRef{TypeKind::kPrimitive, std::move(name), 0, TypeKind::kClass};
}

TypeRef TypeRef::named(std::string name) { return TypeRef{TypeKind::kClass, std::move(name), 0, TypeKind::kClass}; }

TypeRef TypeRef::variable(std::string name) {
  return TypeRef{TypeKind::kTypeVariable, std::move(name), 0, TypeKind::kClass};
}

TypeRef TypeRef::array_of(const TypeRef& element, int dimensions) {
  if (element.is_array()) {
    return TypeRef{TypeKind::kArray, element.name, element.dimensions + dimensions, element.element_kind};
  }
  return TypeRef{TypeKind::kArray, element.name, dimensions, element.kind};
}

TypeRef TypeRef::element() const {
  if (!is_array()) return *this;
  return TypeRef{element_kind, name, 0, TypeKind::kClass};
}

std::string TypeRef::to_string() const {
  std::string out = name;
  for (int i = 0; i < dimensions; ++i) out += "[]";
  return out;
}

bool is_primitive_name(std::string_view name) {
  return std::find(kPrimitiveNames.begin(), kPrimitiveNames.end(), name) != kPrimitiveNames.end();
}

std::string_view to_string(Visibility v) {
  switch (v) {
    case Visibility::kPublic:
      return "public";
    case Visibility::kProtected:
      return "protected";
    case Visibility::kPackage:
      return "package";
    case Visibility::kPrivate:
      return "private";
  }
  return "package";
}

std::string method_key(const MethodDescriptor& m) {
  std::string key = m.name + "(";
  for (std::size_t i = 0; i < m.parameters.size(); ++i) {
    if (i) key += ",";
    key += m.parameters[i].type.to_string();
  }
  key += ")";
  return key;
}

const FieldDescriptor* find_field(const ClassDescriptor& c, std::string_view name) {
  for (const auto& f : c.fields)
    if (f.name == name) return &f;
  return nullptr;
}

const MethodDescriptor* find_method(const ClassDescriptor& c, std::string_view key) {
  for (const auto& m : c.methods)
    if (method_key(m) == key) return &m;
  return nullptr;
}

std::vector<const MethodDescriptor*> public_methods(const ClassDescriptor& c, bool include_constructors) {
  std::vector<const MethodDescriptor*> out;
  for (const auto& m : c.methods) {
    if (!m.is_public()) continue;
    if (m.is_constructor() && !include_constructors) continue;
    out.push_back(&m);
  }
  return out;
}

TypeRef class_type(const ClassDescriptor& c) { return TypeRef::named(c.simple_name); }

std::vector<Violation> validate_descriptor(const ClassDescriptor& c) {
  std::vector<Violation> out;
  if (c.qualified_name.empty()) out.push_back({"class", "qualified name is empty"});
  if (c.simple_name.empty()) out.push_back({"class", "simple name is empty"});
  for (const auto& s : c.supertypes) {
    if (s == c.qualified_name || s == c.simple_name)
      out.push_back({"supertype " + s, "class lists itself as a supertype"});
  }
  for (const auto& tp : c.type_parameters)
    if (tp.empty()) out.push_back({"class", "type parameter has an empty name"});

  std::unordered_set<std::string> field_names;
  for (const auto& f : c.fields) {
    const std::string element = "field " + f.name;
    if (f.name.empty()) out.push_back({element, "field name is empty"});
    if (!field_names.insert(f.name).second) out.push_back({element, "duplicate field name '" + f.name + "'"});
    check_type(f.type, element, false, out);
  }

  std::unordered_set<std::string> keys;
  for (const auto& m : c.methods) {
    const std::string key = method_key(m);
    const std::string element = "method " + key;
    if (m.name.empty()) out.push_back({element, "method name is empty"});
    if (!keys.insert(key).second) out.push_back({element, "duplicate method signature"});
    check_type(m.return_type, element + " return type", true, out);
    std::unordered_set<std::string> params;
    for (const auto& p : m.parameters) {
      if (p.name.empty()) out.push_back({element, "parameter name is empty"});
      if (!params.insert(p.name).second) out.push_back({element, "duplicate parameter name '" + p.name + "'"});
      check_type(p.type, element + " parameter " + p.name, false, out);
    }
    for (const auto& f : m.fields_read)
      if (!field_names.contains(f)) out.push_back({element + " fields_read", "undeclared field '" + f + "'"});
    for (const auto& f : m.fields_written)
      if (!field_names.contains(f)) out.push_back({element + " fields_written", "undeclared field '" + f + "'"});
    for (const auto& inv : m.invoked_methods)
      if (inv.callee.empty() || inv.arg_count < 0)
        out.push_back({element + " invoked_methods", "malformed invocation record"});
  }
  return out;
}

}  // namespace dropin
