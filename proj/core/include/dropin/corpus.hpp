// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dropin/class_model.hpp"

namespace dropin {

/// Resolves class names to descriptors. Implementations must be safe to call
/// concurrently.
class ClassLookup {
 public:
  virtual ~ClassLookup() = default;
  virtual const ClassDescriptor* find(std::string_view name) const = 0;
};

/// An owning, immutable set of classes with unique qualified names.
///
/// find() tries the name as a qualified name first, then its last path
/// segment as a simple name. An ambiguous simple name resolves to the
/// lexicographically smallest qualified name.
class Corpus : public ClassLookup {
 public:
  Corpus() = default;
  /// Throws Error(kInvalidDescriptor) on a duplicate qualified name.
  explicit Corpus(std::vector<ClassDescriptor> classes);

  const ClassDescriptor* find(std::string_view name) const override;
  std::span<const ClassDescriptor> classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }

 private:
  std::vector<ClassDescriptor> classes_;
  std::map<std::string, std::size_t, std::less<>> by_qualified_;
  std::map<std::string, std::size_t, std::less<>> by_simple_;
};

/// Last segment of a dotted name: "java.util.List" -> "List".
std::string_view simple_name_of(std::string_view name);

/// Copies `c` and adds the non-private members of its ancestors up to
/// `depth` levels, visiting supertypes depth-first in declaration order. A
/// field is inherited unless one with the same name is already present; a
/// method unless one with the same key is. Constructors are never inherited. Supertypes absent from the
/// corpus are ignored.
///
/// Throws Error(kCycle) if the supertype chain revisits a class within the
/// walked depth.
ClassDescriptor flatten_inheritance(const ClassDescriptor& c, const ClassLookup& corpus, int depth);

}  // namespace dropin
