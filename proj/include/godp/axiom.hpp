// Class expressions and atomic axioms of the supported OWL 2 subset.
//
// An atomic axiom is the unit of pruning, deduplication and comparison. Frames
// are desugared into atomic axioms (see frames.hpp); the emitter regroups them.

#ifndef GODP_AXIOM_HPP
#define GODP_AXIOM_HPP

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "godp/name.hpp"

namespace godp {

struct ClassExpr {
  enum class Op { Named, Some, Only, Max, Min, Exactly, Not, And, Or };

  Op op = Op::Named;
  // Named: the class. Restrictions: the object property.
  StructuredName name;
  unsigned cardinality = 0;
  // Restrictions and Not: exactly one. And/Or: two or more.
  std::vector<ClassExpr> operands;

  static ClassExpr named(StructuredName n);
  static ClassExpr thing();
  static ClassExpr restriction(Op op, StructuredName property, ClassExpr filler,
                               unsigned cardinality = 0);
  static ClassExpr negation(ClassExpr operand);
  static ClassExpr nary(Op op, std::vector<ClassExpr> operands);

  bool is_named() const { return op == Op::Named; }
  bool is_restriction() const;

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;
};

struct Declaration {
  EntityKind kind;
  StructuredName name;
  friend bool operator==(const Declaration&, const Declaration&) = default;
};
struct SubClassOf {
  ClassExpr sub, sup;
  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};
struct EquivalentClasses {
  ClassExpr first, second;
  friend bool operator==(const EquivalentClasses&, const EquivalentClasses&) = default;
};
struct DisjointClasses {
  ClassExpr first, second;
  friend bool operator==(const DisjointClasses&, const DisjointClasses&) = default;
};
struct ObjectPropertyDomain {
  StructuredName property;
  ClassExpr domain;
  friend bool operator==(const ObjectPropertyDomain&, const ObjectPropertyDomain&) = default;
};
struct ObjectPropertyRange {
  StructuredName property;
  ClassExpr range;
  friend bool operator==(const ObjectPropertyRange&, const ObjectPropertyRange&) = default;
};
struct InverseProperties {
  StructuredName first, second;
  friend bool operator==(const InverseProperties&, const InverseProperties&) = default;
};
// kind is ObjectProperty or DataProperty.
struct FunctionalProperty {
  EntityKind kind;
  StructuredName property;
  friend bool operator==(const FunctionalProperty&, const FunctionalProperty&) = default;
};
struct InverseFunctionalProperty {
  StructuredName property;
  friend bool operator==(const InverseFunctionalProperty&,
                         const InverseFunctionalProperty&) = default;
};
struct SubPropertyOf {
  EntityKind kind;
  StructuredName sub, sup;
  friend bool operator==(const SubPropertyOf&, const SubPropertyOf&) = default;
};
struct ClassAssertion {
  ClassExpr type;
  StructuredName individual;
  friend bool operator==(const ClassAssertion&, const ClassAssertion&) = default;
};
struct PropertyAssertion {
  StructuredName property, subject, object;
  friend bool operator==(const PropertyAssertion&, const PropertyAssertion&) = default;
};

using Axiom = std::variant<Declaration, SubClassOf, EquivalentClasses, DisjointClasses,
                           ObjectPropertyDomain, ObjectPropertyRange, InverseProperties,
                           FunctionalProperty, InverseFunctionalProperty, SubPropertyOf,
                           ClassAssertion, PropertyAssertion>;

// Functional-style rendering, e.g. `SubClassOf(A,ObjectSomeValuesFrom(p,B))`.
// Injective on the data model; used as the total order for normalization.
std::string canonical_text(const ClassExpr& e);
std::string canonical_text(const Axiom& ax);

// Sorts operands of and/or (recursively) and of EquivalentClasses and
// DisjointClasses by canonical text. Idempotent.
ClassExpr normalize(const ClassExpr& e);
Axiom normalize_axiom(const Axiom& ax);

bool axioms_equal(const Axiom& a, const Axiom& b);

// Every structured name occurring in the axiom, including bases and
// constituents at any depth. Sorted, no duplicates.
std::vector<StructuredName> mentions(const Axiom& ax);

// Names in entity positions with the kind their position implies
// (owl:Thing excluded). May contain repeats.
std::vector<std::pair<StructuredName, EntityKind>> typed_symbols(const Axiom& ax);

// Rewrites every entity-position name (constituents are the callback's business).
using NameMap = std::function<StructuredName(const StructuredName&)>;
ClassExpr map_names(const ClassExpr& e, const NameMap& fn);
Axiom map_names(const Axiom& ax, const NameMap& fn);

}  // namespace godp

#endif  // GODP_AXIOM_HPP
