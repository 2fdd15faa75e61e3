// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// In-memory class representation shared by every stage of the pipeline.
// Descriptors are plain values; once built they are treated as immutable and
// may be read concurrently.

#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dropin {

enum class TypeKind { kPrimitive, kClass, kTypeVariable, kArray };

/// A type occurrence with generic arguments erased. Arrays keep the element's
/// kind and name plus a dimension count, so `Object[][]` is
/// {kArray, "Object", 2, kClass}.
struct TypeRef {
  TypeKind kind = TypeKind::kClass;
  std::string name;
  int dimensions = 0;
  TypeKind element_kind = TypeKind::kClass;

  static TypeRef primitive(std::string name);
  static TypeRef named(std::string name);
  static TypeRef variable(std::string name);
  static TypeRef array_of(const TypeRef& element, int dimensions = 1);

  bool is_array() const { return kind == TypeKind::kArray; }
  bool is_primitive() const { return kind == TypeKind::kPrimitive; }
  bool is_reference() const { return kind != TypeKind::kPrimitive; }
  /// Element type of an array (dimension stripped entirely); *this otherwise.
  TypeRef element() const;
  /// Java-like spelling: "int", "List", "E", "Object[]".
  std::string to_string() const;

  auto operator<=>(const TypeRef&) const = default;
};

bool is_primitive_name(std::string_view name);

enum class Visibility { kPublic, kProtected, kPackage, kPrivate };

std::string_view to_string(Visibility v);

struct FieldDescriptor {
  std::string name;
  TypeRef type;
  bool is_static = false;
  bool is_final = false;
  Visibility visibility = Visibility::kPackage;

  bool operator==(const FieldDescriptor&) const = default;
};

struct Parameter {
  std::string name;
  TypeRef type;

  bool operator==(const Parameter&) const = default;
};

enum class Receiver { kSelf, kOther };

struct Invocation {
  std::string callee;
  int arg_count = 0;
  Receiver receiver = Receiver::kSelf;

  bool operator==(const Invocation&) const = default;
};

inline constexpr std::string_view kConstructorName = "<init>";

struct MethodDescriptor {
  std::string name;
  std::vector<Parameter> parameters;
  TypeRef return_type = TypeRef::primitive("void");
  Visibility visibility = Visibility::kPackage;
  bool is_static = false;
  std::vector<std::string> body_tokens;
  std::vector<Invocation> invoked_methods;
  std::set<std::string> fields_read;
  std::set<std::string> fields_written;
  std::vector<std::string> local_variables;

  bool is_public() const { return visibility == Visibility::kPublic; }
  bool is_constructor() const { return name == kConstructorName; }

  bool operator==(const MethodDescriptor&) const = default;
};

struct ClassDescriptor {
  std::string qualified_name;
  std::string simple_name;
  std::vector<std::string> type_parameters;
  std::vector<std::string> supertypes;
  std::vector<FieldDescriptor> fields;
  std::vector<MethodDescriptor> methods;
  std::string source_id;

  bool operator==(const ClassDescriptor&) const = default;
};

/// Identity used for overriding and for α keys: `name(T1,T2)`, e.g.
/// `set(int,E)`.
std::string method_key(const MethodDescriptor& m);

const FieldDescriptor* find_field(const ClassDescriptor& c, std::string_view name);
const MethodDescriptor* find_method(const ClassDescriptor& c, std::string_view key);

/// Public methods in declaration order. Constructors are skipped unless
/// `include_constructors` is set.
std::vector<const MethodDescriptor*> public_methods(const ClassDescriptor& c, bool include_constructors = false);

/// The type a class declares, as it appears in other signatures.
TypeRef class_type(const ClassDescriptor& c);

struct Violation {
  std::string element;  // e.g. "field data", "method get(), fields_read"
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Checks every class-model invariant. Pure and total: never throws.
std::vector<Violation> validate_descriptor(const ClassDescriptor& c);

}  // namespace dropin
