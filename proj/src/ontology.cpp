#include "godp/ontology.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "godp/diagnostics.hpp"
#include "godp/frames.hpp"

namespace godp {

void add_symbol(Signature& signature, const StructuredName& name, EntityKind kind) {
  auto [it, inserted] = signature.emplace(name, kind);
  if (!inserted && it->second != kind) {
    throw Error(ErrorKind::ConflictingKind, "'" + name.str() + "' is used both as " +
                                                std::string(to_string(it->second)) + " and as " +
                                                std::string(to_string(kind)));
  }
}

void merge_signature(Signature& into, const Signature& from) {
  for (const auto& [name, kind] : from) add_symbol(into, name, kind);
}

std::vector<Axiom> deduplicate(const std::vector<Axiom>& axioms) {
  std::vector<Axiom> out;
  std::set<std::string> seen;
  for (const auto& ax : axioms) {
    if (seen.insert(canonical_text(normalize_axiom(ax))).second) out.push_back(ax);
  }
  return out;
}

FlatOntology make_flat(const std::vector<Axiom>& axioms) {
  FlatOntology out;
  out.axioms = deduplicate(axioms);
  for (const auto& ax : out.axioms) {
    for (const auto& [name, kind] : typed_symbols(ax)) add_symbol(out.signature, name, kind);
  }
  return out;
}

std::vector<StructuredName> undeclared_symbols(const FlatOntology& ontology) {
  std::set<StructuredName> declared;
  for (const auto& ax : ontology.axioms) {
    if (auto* d = std::get_if<Declaration>(&ax)) declared.insert(d->name);
  }
  std::vector<StructuredName> out;
  for (const auto& [name, kind] : ontology.signature) {
    if (!declared.contains(name)) out.push_back(name);
  }
  return out;
}

namespace {

struct Placement {
  EntityKind kind;
  StructuredName subject;
  SectionKind section = SectionKind::Unsupported;  // Unsupported: header only
  SectionItem item;
};

const StructuredName& class_subject(const ClassExpr& e, const Axiom& ax) {
  if (!e.is_named()) {
    throw Error(ErrorKind::UnsupportedConstruct,
                "axiom without a named subject cannot be written as a frame: " +
                    canonical_text(ax));
  }
  return e.name;
}

Placement place(const Axiom& ax) {
  using K = EntityKind;
  using S = SectionKind;
  auto item = [](auto value) { return SectionItem{std::move(value), {}}; };
  if (auto* a = std::get_if<Declaration>(&ax)) return {a->kind, a->name, S::Unsupported, {}};
  if (auto* a = std::get_if<SubClassOf>(&ax)) {
    return {K::Class, class_subject(a->sub, ax), S::SubClassOf, item(a->sup)};
  }
  // Both operands of a symmetric axiom are candidates for the frame subject.
  auto symmetric = [&](const ClassExpr& first, const ClassExpr& second, SectionKind section) {
    if (!first.is_named() && second.is_named()) {
      return Placement{K::Class, second.name, section, item(first)};
    }
    return Placement{K::Class, class_subject(first, ax), section, item(second)};
  };
  if (auto* a = std::get_if<EquivalentClasses>(&ax)) {
    return symmetric(a->first, a->second, S::EquivalentTo);
  }
  if (auto* a = std::get_if<DisjointClasses>(&ax)) {
    return symmetric(a->first, a->second, S::DisjointWith);
  }
  if (auto* a = std::get_if<ObjectPropertyDomain>(&ax)) {
    return {K::ObjectProperty, a->property, S::Domain, item(a->domain)};
  }
  if (auto* a = std::get_if<ObjectPropertyRange>(&ax)) {
    return {K::ObjectProperty, a->property, S::Range, item(a->range)};
  }
  if (auto* a = std::get_if<InverseProperties>(&ax)) {
    return {K::ObjectProperty, a->first, S::InverseOf, item(a->second)};
  }
  if (auto* a = std::get_if<FunctionalProperty>(&ax)) {
    return {a->kind, a->property, S::Characteristics, item(Characteristic{"Functional"})};
  }
  if (auto* a = std::get_if<InverseFunctionalProperty>(&ax)) {
    return {K::ObjectProperty, a->property, S::Characteristics,
            item(Characteristic{"InverseFunctional"})};
  }
  if (auto* a = std::get_if<SubPropertyOf>(&ax)) {
    return {a->kind, a->sub, S::SubPropertyOf, item(a->sup)};
  }
  if (auto* a = std::get_if<ClassAssertion>(&ax)) {
    return {K::Individual, a->individual, S::Types, item(a->type)};
  }
  const auto& a = std::get<PropertyAssertion>(ax);
  return {K::Individual, a.subject, S::Facts, item(Fact{a.property, a.object})};
}

constexpr std::array kSectionOrder = {
    SectionKind::Characteristics, SectionKind::Domain,       SectionKind::Range,
    SectionKind::InverseOf,       SectionKind::SubPropertyOf, SectionKind::SubClassOf,
    SectionKind::EquivalentTo,    SectionKind::DisjointWith,  SectionKind::Types,
    SectionKind::Facts,
};

int kind_rank(EntityKind kind) {
  switch (kind) {
    case EntityKind::ObjectProperty: return 0;
    case EntityKind::DataProperty: return 1;
    case EntityKind::Class: return 2;
    case EntityKind::Individual: return 3;
  }
  return 4;
}

}  // namespace

std::string emit_manchester(const FlatOntology& ontology, const EmitOptions& options) {
  if (!options.allow_structured_names) {
    for (const auto& ax : ontology.axioms) {
      for (const auto& name : mentions(ax)) {
        if (!name.is_plain()) {
          throw Error(ErrorKind::UnstratifiedName,
                      "'" + name.str() + "' must be stratified before emission");
        }
      }
    }
  }

  // Frames keyed by (kind rank, subject text); sections keep first-occurrence order.
  struct FrameKey {
    int rank;
    std::string subject;
    auto operator<=>(const FrameKey&) const = default;
  };
  std::map<FrameKey, Frame> frames;
  for (const auto& ax : ontology.axioms) {
    Placement p = place(ax);
    auto [it, inserted] = frames.try_emplace(FrameKey{kind_rank(p.kind), p.subject.str()});
    Frame& frame = it->second;
    if (inserted) {
      frame.kind = p.kind;
      frame.subject = p.subject;
    }
    if (p.section == SectionKind::Unsupported) continue;
    auto section = std::find_if(frame.sections.begin(), frame.sections.end(),
                                [&](const Section& s) { return s.kind == p.section; });
    if (section == frame.sections.end()) {
      frame.sections.push_back(Section{p.section, std::string(to_string(p.section)), {}, {}});
      section = std::prev(frame.sections.end());
    }
    section->items.push_back(std::move(p.item));
  }

  std::vector<Frame> ordered;
  ordered.reserve(frames.size());
  for (auto& [key, frame] : frames) {
    std::stable_sort(frame.sections.begin(), frame.sections.end(),
                     [](const Section& a, const Section& b) {
                       auto pos = [](SectionKind k) {
                         return std::find(kSectionOrder.begin(), kSectionOrder.end(), k) -
                                kSectionOrder.begin();
                       };
                       return pos(a.kind) < pos(b.kind);
                     });
    ordered.push_back(std::move(frame));
  }
  return print_frames(ordered);
}

}  // namespace godp
