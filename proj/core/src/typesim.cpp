// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/typesim.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>

#include "dropin/assignment.hpp"
#include "dropin/tokenizer.hpp"

namespace dropin {

namespace {

// Position on the widening chain byte<short<int<long<float<double; char
// joins at int. -1 for boolean/void.
int widening_rank(std::string_view p) {
  static constexpr std::array<std::string_view, 6> kChain = {"byte", "short", "int", "long", "float", "double"};
  for (std::size_t i = 0; i < kChain.size(); ++i)
    if (kChain[i] == p) return static_cast<int>(i);
  return -1;
}

bool primitive_widens(std::string_view a, std::string_view b) {
  if (a == b) return true;
  if (a == "char") return widening_rank(b) >= widening_rank("int");
  if (b == "char") return false;
  const int ra = widening_rank(a), rb = widening_rank(b);
  return ra >= 0 && rb >= 0 && ra <= rb;
}

constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kBoxes = {{{"boolean", "Boolean"},
                                                                                  {"byte", "Byte"},
                                                                                  {"short", "Short"},
                                                                                  {"char", "Character"},
                                                                                  {"int", "Integer"},
                                                                                  {"long", "Long"},
                                                                                  {"float", "Float"},
                                                                                  {"double", "Double"}}};

bool boxes_to(std::string_view primitive, std::string_view cls) {
  const auto simple = simple_name_of(cls);
  for (const auto& [p, w] : kBoxes)
    if (p == primitive && w == simple) return true;
  return false;
}

bool is_object(std::string_view name) { return name == "Object" || name == "java.lang.Object"; }

bool declared_subtype(const std::string& a, const std::string& b, const ClassLookup* hierarchy) {
  if (hierarchy == nullptr) return false;
  std::vector<const ClassDescriptor*> frontier;
  std::set<std::string> seen;
  if (const auto* c = hierarchy->find(a)) frontier.push_back(c);
  while (!frontier.empty()) {
    const ClassDescriptor* c = frontier.back();
    frontier.pop_back();
    if (!seen.insert(c->qualified_name).second) continue;
    for (const auto& s : c->supertypes) {
      if (s == b || simple_name_of(s) == simple_name_of(b)) return true;
      if (const auto* next = hierarchy->find(s)) frontier.push_back(next);
    }
  }
  return false;
}

}  // namespace

bool type_cast_check(const TypeRef& a, const TypeRef& b, const ClassLookup* hierarchy) {
  if (a == b) return true;
  if (a.is_array() || b.is_array()) {
    if (a.is_array() && b.is_array())
      return a.dimensions == b.dimensions && type_cast_check(a.element(), b.element(), hierarchy);
    // An array is an Object, and any reference fits a type variable.
    if (a.is_array()) return b.kind == TypeKind::kTypeVariable || (b.kind == TypeKind::kClass && is_object(b.name));
    return a.kind == TypeKind::kTypeVariable;
  }
  if (a.is_primitive() && b.is_primitive()) return primitive_widens(a.name, b.name);
  if (a.is_primitive()) return b.kind == TypeKind::kClass && boxes_to(a.name, b.name);
  if (b.is_primitive()) return a.kind == TypeKind::kClass && boxes_to(b.name, a.name);
  if (a.kind == TypeKind::kTypeVariable || b.kind == TypeKind::kTypeVariable) return true;
  // Both class types.
  if (simple_name_of(a.name) == simple_name_of(b.name) &&
      (a.name.find('.') == std::string::npos || b.name.find('.') == std::string::npos))
    return true;
  if (is_object(b.name)) return true;
  return declared_subtype(a.name, b.name, hierarchy);
}

TypeSimilarityMatrix::TypeSimilarityMatrix(std::vector<TypeRef> q_types, std::vector<TypeRef> r_types, double tt)
    : q_types_(std::move(q_types)), r_types_(std::move(r_types)), tt_(tt) {}

double TypeSimilarityMatrix::at(const TypeRef& q, const TypeRef& r) const {
  auto it = scores_.find({q, r});
  return it == scores_.end() ? kForbidden : it->second;
}

void TypeSimilarityMatrix::set(const TypeRef& q, const TypeRef& r, double score) { scores_[{q, r}] = score; }

std::size_t TypeSimilarityMatrix::non_sentinel_count() const {
  return static_cast<std::size_t>(
      std::count_if(scores_.begin(), scores_.end(), [](const auto& kv) { return kv.second != kForbidden; }));
}

std::vector<TypeRef> class_types(const ClassDescriptor& c) {
  std::vector<TypeRef> out;
  auto add = [&](const TypeRef& t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  };
  add(class_type(c));
  for (const auto& f : c.fields) add(f.type);
  for (const auto& m : c.methods) {
    for (const auto& p : m.parameters) add(p.type);
    add(m.return_type);
  }
  return out;
}

TypeSimilarityMatrix type_similarity_matrix(const ClassDescriptor& q, const ClassDescriptor& r, const ClassIndex& index,
                                            const EmbeddingFunction& f, double tt, const ClassLookup* hierarchy) {
  TypeSimilarityMatrix ts(class_types(q), class_types(r), tt);
  std::map<std::string, Vector> vectors;
  auto vector_of = [&](const std::string& name) -> const Vector& {
    auto it = vectors.find(name);
    if (it != vectors.end()) return it->second;
    Vector v;
    if (auto i = index.find(name); i && index.dimension() == f.dimension()) {
      const auto s = index.vector(*i);
      v.assign(s.begin(), s.end());
    } else {
      v = f.embed_bag(split_identifier(simple_name_of(name)));
    }
    return vectors.emplace(name, std::move(v)).first->second;
  };

  const TypeRef q_self = class_type(q), r_self = class_type(r);
  for (const auto& a : ts.query_types()) {
    for (const auto& b : ts.candidate_types()) {
      double score = kForbidden;
      if ((a == q_self && b == r_self) || type_cast_check(a, b, hierarchy)) {
        score = 1.0;
      } else if (a.kind == TypeKind::kClass && b.kind == TypeKind::kClass) {
        const double s = cosine(vector_of(a.name), vector_of(b.name));
        if (s > tt) score = s;
      }
      ts.set(a, b, score);
    }
  }
  return ts;
}

}  // namespace dropin
