// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/corpus.hpp"

#include <algorithm>
#include <set>

#include "dropin/error.hpp"

namespace dropin {

std::string_view simple_name_of(std::string_view name) {
  const auto dot = name.rfind('.');
  return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

Corpus::Corpus(std::vector<ClassDescriptor> classes) : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& c = classes_[i];
    if (!by_qualified_.emplace(c.qualified_name, i).second)
      throw Error(ErrorKind::kInvalidDescriptor, "duplicate class '" + c.qualified_name + "'");
  }
  // Iterating by_qualified_ in key order makes the smallest qualified name
  // win for an ambiguous simple name.
  for (const auto& [name, i] : by_qualified_) by_simple_.emplace(std::string(simple_name_of(name)), i);
}

const ClassDescriptor* Corpus::find(std::string_view name) const {
  if (auto it = by_qualified_.find(name); it != by_qualified_.end()) return &classes_[it->second];
  if (auto it = by_simple_.find(simple_name_of(name)); it != by_simple_.end()) return &classes_[it->second];
  return nullptr;
}

namespace {

void merge_ancestors(ClassDescriptor& out, const ClassDescriptor& c, const ClassLookup& corpus, int depth,
                     std::vector<std::string>& path) {
  if (depth <= 0) return;
  for (const auto& super_name : c.supertypes) {
    const ClassDescriptor* super = corpus.find(super_name);
    if (super == nullptr) continue;
    if (std::find(path.begin(), path.end(), super->qualified_name) != path.end()) {
      std::string chain;
      for (const auto& p : path) chain += p + " -> ";
      throw Error(ErrorKind::kCycle, "supertype cycle: " + chain + super->qualified_name);
    }

    for (const auto& f : super->fields) {
      if (f.visibility == Visibility::kPrivate || find_field(out, f.name) != nullptr) continue;
      out.fields.push_back(f);
    }
    for (const auto& m : super->methods) {
      if (m.visibility == Visibility::kPrivate || m.is_constructor()) continue;
      if (find_method(out, method_key(m)) != nullptr) continue;
      out.methods.push_back(m);
    }

    path.push_back(super->qualified_name);
    merge_ancestors(out, *super, corpus, depth - 1, path);
    path.pop_back();
  }
}

}  // namespace

ClassDescriptor flatten_inheritance(const ClassDescriptor& c, const ClassLookup& corpus, int depth) {
  ClassDescriptor out = c;
  std::vector<std::string> path{c.qualified_name};
  merge_ancestors(out, c, corpus, depth, path);

  // Inherited bodies may touch ancestor fields that were not inherited
  // (private ones); keep the access sets within the flattened field table.
  std::set<std::string> names;
  for (const auto& f : out.fields) names.insert(f.name);
  for (std::size_t i = c.methods.size(); i < out.methods.size(); ++i) {
    auto& m = out.methods[i];
    std::erase_if(m.fields_read, [&](const std::string& f) { return !names.contains(f); });
    std::erase_if(m.fields_written, [&](const std::string& f) { return !names.contains(f); });
  }
  return out;
}

}  // namespace dropin
