#include "godp/axiom.hpp"

#include <algorithm>
#include <set>

namespace godp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string_view op_tag(ClassExpr::Op op) {
  switch (op) {
    case ClassExpr::Op::Named: return "Class";
    case ClassExpr::Op::Some: return "ObjectSomeValuesFrom";
    case ClassExpr::Op::Only: return "ObjectAllValuesFrom";
    case ClassExpr::Op::Max: return "ObjectMaxCardinality";
    case ClassExpr::Op::Min: return "ObjectMinCardinality";
    case ClassExpr::Op::Exactly: return "ObjectExactCardinality";
    case ClassExpr::Op::Not: return "ObjectComplementOf";
    case ClassExpr::Op::And: return "ObjectIntersectionOf";
    case ClassExpr::Op::Or: return "ObjectUnionOf";
  }
  return "?";
}

void sort_pair(ClassExpr& a, ClassExpr& b) {
  if (canonical_text(b) < canonical_text(a)) std::swap(a, b);
}

}  // namespace

ClassExpr ClassExpr::named(StructuredName n) {
  ClassExpr e;
  e.name = std::move(n);
  return e;
}

ClassExpr ClassExpr::thing() { return named(StructuredName(std::string(kThing))); }

ClassExpr ClassExpr::restriction(Op op, StructuredName property, ClassExpr filler,
                                 unsigned cardinality) {
  ClassExpr e;
  e.op = op;
  e.name = std::move(property);
  e.cardinality = cardinality;
  e.operands.push_back(std::move(filler));
  return e;
}

ClassExpr ClassExpr::negation(ClassExpr operand) {
  ClassExpr e;
  e.op = Op::Not;
  e.operands.push_back(std::move(operand));
  return e;
}

ClassExpr ClassExpr::nary(Op op, std::vector<ClassExpr> operands) {
  ClassExpr e;
  e.op = op;
  e.operands = std::move(operands);
  return e;
}

bool ClassExpr::is_restriction() const {
  return op == Op::Some || op == Op::Only || op == Op::Max || op == Op::Min ||
         op == Op::Exactly;
}

std::string canonical_text(const ClassExpr& e) {
  if (e.is_named()) return e.name.str();
  std::string out(op_tag(e.op));
  out += '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out += ',';
    first = false;
  };
  if (e.op == ClassExpr::Op::Max || e.op == ClassExpr::Op::Min ||
      e.op == ClassExpr::Op::Exactly) {
    sep();
    out += std::to_string(e.cardinality);
  }
  if (e.is_restriction()) {
    sep();
    out += e.name.str();
  }
  for (const auto& operand : e.operands) {
    sep();
    out += canonical_text(operand);
  }
  out += ')';
  return out;
}

std::string canonical_text(const Axiom& ax) {
  auto ce = [](const ClassExpr& e) { return canonical_text(e); };
  return std::visit(
      overloaded{
          [&](const Declaration& a) {
            return "Declaration(" + std::string(to_string(a.kind)) + "," + a.name.str() + ")";
          },
          [&](const SubClassOf& a) { return "SubClassOf(" + ce(a.sub) + "," + ce(a.sup) + ")"; },
          [&](const EquivalentClasses& a) {
            return "EquivalentClasses(" + ce(a.first) + "," + ce(a.second) + ")";
          },
          [&](const DisjointClasses& a) {
            return "DisjointClasses(" + ce(a.first) + "," + ce(a.second) + ")";
          },
          [&](const ObjectPropertyDomain& a) {
            return "ObjectPropertyDomain(" + a.property.str() + "," + ce(a.domain) + ")";
          },
          [&](const ObjectPropertyRange& a) {
            return "ObjectPropertyRange(" + a.property.str() + "," + ce(a.range) + ")";
          },
          [&](const InverseProperties& a) {
            return "InverseObjectProperties(" + a.first.str() + "," + a.second.str() + ")";
          },
          [&](const FunctionalProperty& a) {
            return "Functional" + std::string(to_string(a.kind)) + "(" + a.property.str() + ")";
          },
          [&](const InverseFunctionalProperty& a) {
            return "InverseFunctionalObjectProperty(" + a.property.str() + ")";
          },
          [&](const SubPropertyOf& a) {
            return "Sub" + std::string(to_string(a.kind)) + "Of(" + a.sub.str() + "," +
                   a.sup.str() + ")";
          },
          [&](const ClassAssertion& a) {
            return "ClassAssertion(" + ce(a.type) + "," + a.individual.str() + ")";
          },
          [&](const PropertyAssertion& a) {
            return "ObjectPropertyAssertion(" + a.property.str() + "," + a.subject.str() + "," +
                   a.object.str() + ")";
          },
      },
      ax);
}

ClassExpr normalize(const ClassExpr& e) {
  ClassExpr out = e;
  for (auto& operand : out.operands) operand = normalize(operand);
  if (out.op == ClassExpr::Op::And || out.op == ClassExpr::Op::Or) {
    std::vector<std::pair<std::string, ClassExpr>> keyed;
    keyed.reserve(out.operands.size());
    for (auto& operand : out.operands) keyed.emplace_back(canonical_text(operand), std::move(operand));
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    out.operands.clear();
    for (auto& [key, operand] : keyed) out.operands.push_back(std::move(operand));
  }
  return out;
}

Axiom normalize_axiom(const Axiom& ax) {
  return std::visit(
      overloaded{
          [](SubClassOf a) -> Axiom {
            a.sub = normalize(a.sub);
            a.sup = normalize(a.sup);
            return a;
          },
          [](EquivalentClasses a) -> Axiom {
            a.first = normalize(a.first);
            a.second = normalize(a.second);
            sort_pair(a.first, a.second);
            return a;
          },
          [](DisjointClasses a) -> Axiom {
            a.first = normalize(a.first);
            a.second = normalize(a.second);
            sort_pair(a.first, a.second);
            return a;
          },
          [](ObjectPropertyDomain a) -> Axiom {
            a.domain = normalize(a.domain);
            return a;
          },
          [](ObjectPropertyRange a) -> Axiom {
            a.range = normalize(a.range);
            return a;
          },
          [](ClassAssertion a) -> Axiom {
            a.type = normalize(a.type);
            return a;
          },
          [](const auto& a) -> Axiom { return a; },
      },
      ax);
}

bool axioms_equal(const Axiom& a, const Axiom& b) {
  return normalize_axiom(a) == normalize_axiom(b);
}

namespace {

void class_mentions(const ClassExpr& e, std::vector<StructuredName>& out) {
  if (e.is_named() || e.is_restriction()) collect_closure(e.name, out);
  for (const auto& operand : e.operands) class_mentions(operand, out);
}

void class_symbols(const ClassExpr& e, std::vector<std::pair<StructuredName, EntityKind>>& out) {
  if (e.is_named()) {
    if (!e.name.is_thing()) out.emplace_back(e.name, EntityKind::Class);
  } else if (e.is_restriction()) {
    out.emplace_back(e.name, EntityKind::ObjectProperty);
  }
  for (const auto& operand : e.operands) class_symbols(operand, out);
}

}  // namespace

std::vector<StructuredName> mentions(const Axiom& ax) {
  std::vector<StructuredName> out;
  auto name = [&](const StructuredName& n) { collect_closure(n, out); };
  auto ce = [&](const ClassExpr& e) { class_mentions(e, out); };
  std::visit(overloaded{
                 [&](const Declaration& a) { name(a.name); },
                 [&](const SubClassOf& a) { ce(a.sub), ce(a.sup); },
                 [&](const EquivalentClasses& a) { ce(a.first), ce(a.second); },
                 [&](const DisjointClasses& a) { ce(a.first), ce(a.second); },
                 [&](const ObjectPropertyDomain& a) { name(a.property), ce(a.domain); },
                 [&](const ObjectPropertyRange& a) { name(a.property), ce(a.range); },
                 [&](const InverseProperties& a) { name(a.first), name(a.second); },
                 [&](const FunctionalProperty& a) { name(a.property); },
                 [&](const InverseFunctionalProperty& a) { name(a.property); },
                 [&](const SubPropertyOf& a) { name(a.sub), name(a.sup); },
                 [&](const ClassAssertion& a) { ce(a.type), name(a.individual); },
                 [&](const PropertyAssertion& a) {
                   name(a.property), name(a.subject), name(a.object);
                 },
             },
             ax);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<StructuredName, EntityKind>> typed_symbols(const Axiom& ax) {
  using K = EntityKind;
  std::vector<std::pair<StructuredName, EntityKind>> out;
  auto name = [&](const StructuredName& n, K k) {
    if (!n.is_thing()) out.emplace_back(n, k);
  };
  auto ce = [&](const ClassExpr& e) { class_symbols(e, out); };
  std::visit(overloaded{
                 [&](const Declaration& a) { name(a.name, a.kind); },
                 [&](const SubClassOf& a) { ce(a.sub), ce(a.sup); },
                 [&](const EquivalentClasses& a) { ce(a.first), ce(a.second); },
                 [&](const DisjointClasses& a) { ce(a.first), ce(a.second); },
                 [&](const ObjectPropertyDomain& a) {
                   name(a.property, K::ObjectProperty), ce(a.domain);
                 },
                 [&](const ObjectPropertyRange& a) {
                   name(a.property, K::ObjectProperty), ce(a.range);
                 },
                 [&](const InverseProperties& a) {
                   name(a.first, K::ObjectProperty), name(a.second, K::ObjectProperty);
                 },
                 [&](const FunctionalProperty& a) { name(a.property, a.kind); },
                 [&](const InverseFunctionalProperty& a) {
                   name(a.property, K::ObjectProperty);
                 },
                 [&](const SubPropertyOf& a) { name(a.sub, a.kind), name(a.sup, a.kind); },
                 [&](const ClassAssertion& a) { ce(a.type), name(a.individual, K::Individual); },
                 [&](const PropertyAssertion& a) {
                   name(a.property, K::ObjectProperty), name(a.subject, K::Individual),
                       name(a.object, K::Individual);
                 },
             },
             ax);
  return out;
}

ClassExpr map_names(const ClassExpr& e, const NameMap& fn) {
  ClassExpr out = e;
  if (out.is_named()) {
    if (!out.name.is_thing()) out.name = fn(out.name);
  } else if (out.is_restriction()) {
    out.name = fn(out.name);
  }
  for (auto& operand : out.operands) operand = map_names(operand, fn);
  return out;
}

Axiom map_names(const Axiom& ax, const NameMap& fn) {
  auto n = [&](StructuredName& name) {
    if (!name.is_thing()) name = fn(name);
  };
  auto c = [&](ClassExpr& e) { e = map_names(e, fn); };
  return std::visit(overloaded{
                        [&](Declaration a) -> Axiom { return n(a.name), a; },
                        [&](SubClassOf a) -> Axiom { return c(a.sub), c(a.sup), a; },
                        [&](EquivalentClasses a) -> Axiom { return c(a.first), c(a.second), a; },
                        [&](DisjointClasses a) -> Axiom { return c(a.first), c(a.second), a; },
                        [&](ObjectPropertyDomain a) -> Axiom {
                          return n(a.property), c(a.domain), a;
                        },
                        [&](ObjectPropertyRange a) -> Axiom {
                          return n(a.property), c(a.range), a;
                        },
                        [&](InverseProperties a) -> Axiom { return n(a.first), n(a.second), a; },
                        [&](FunctionalProperty a) -> Axiom { return n(a.property), a; },
                        [&](InverseFunctionalProperty a) -> Axiom { return n(a.property), a; },
                        [&](SubPropertyOf a) -> Axiom { return n(a.sub), n(a.sup), a; },
                        [&](ClassAssertion a) -> Axiom { return c(a.type), n(a.individual), a; },
                        [&](PropertyAssertion a) -> Axiom {
                          return n(a.property), n(a.subject), n(a.object), a;
                        },
                    },
                    ax);
}

}  // namespace godp
