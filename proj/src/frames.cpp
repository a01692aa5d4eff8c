#include "godp/frames.hpp"

namespace godp {

std::string_view to_string(SectionKind kind) {
  switch (kind) {
    case SectionKind::Characteristics: return "Characteristics";
    case SectionKind::Domain: return "Domain";
    case SectionKind::Range: return "Range";
    case SectionKind::InverseOf: return "InverseOf";
    case SectionKind::SubPropertyOf: return "SubPropertyOf";
    case SectionKind::SubClassOf: return "SubClassOf";
    case SectionKind::EquivalentTo: return "EquivalentTo";
    case SectionKind::DisjointWith: return "DisjointWith";
    case SectionKind::Types: return "Types";
    case SectionKind::Facts: return "Facts";
    case SectionKind::Unsupported: return "Unsupported";
  }
  return "?";
}

namespace {

bool section_allowed(EntityKind frame, SectionKind section) {
  using S = SectionKind;
  switch (frame) {
    case EntityKind::Class:
      return section == S::SubClassOf || section == S::EquivalentTo || section == S::DisjointWith;
    case EntityKind::ObjectProperty:
      return section == S::Characteristics || section == S::Domain || section == S::Range ||
             section == S::InverseOf || section == S::SubPropertyOf;
    case EntityKind::DataProperty:
      return section == S::Characteristics || section == S::SubPropertyOf;
    case EntityKind::Individual:
      return section == S::Types || section == S::Facts;
  }
  return false;
}

[[noreturn]] void unsupported(const std::string& what, SourceLoc loc) {
  throw Error(ErrorKind::UnsupportedConstruct, what, loc);
}

Axiom desugar_item(const Frame& frame, const Section& section, const SectionItem& item) {
  const auto& subject = frame.subject;
  auto ce = [&]() -> const ClassExpr& { return std::get<ClassExpr>(item.value); };
  auto name = [&]() -> const StructuredName& { return std::get<StructuredName>(item.value); };
  switch (section.kind) {
    case SectionKind::SubClassOf:
      return SubClassOf{ClassExpr::named(subject), ce()};
    case SectionKind::EquivalentTo:
      return EquivalentClasses{ClassExpr::named(subject), ce()};
    case SectionKind::DisjointWith:
      return DisjointClasses{ClassExpr::named(subject), ce()};
    case SectionKind::Domain:
      return ObjectPropertyDomain{subject, ce()};
    case SectionKind::Range:
      return ObjectPropertyRange{subject, ce()};
    case SectionKind::InverseOf:
      return InverseProperties{subject, name()};
    case SectionKind::SubPropertyOf:
      return SubPropertyOf{frame.kind, subject, name()};
    case SectionKind::Types:
      return ClassAssertion{ce(), subject};
    case SectionKind::Facts: {
      const auto& fact = std::get<Fact>(item.value);
      return PropertyAssertion{fact.property, subject, fact.object};
    }
    case SectionKind::Characteristics: {
      const auto& c = std::get<Characteristic>(item.value).name;
      if (c == "Functional") return FunctionalProperty{frame.kind, subject};
      if (c == "InverseFunctional" && frame.kind == EntityKind::ObjectProperty) {
        return InverseFunctionalProperty{subject};
      }
      unsupported("characteristic '" + c + "' in " + std::string(to_string(frame.kind)) +
                      " frame",
                  item.loc);
    }
    case SectionKind::Unsupported:
      break;
  }
  unsupported("section '" + section.keyword + ":'", section.loc);
}

}  // namespace

std::vector<Axiom> desugar_frames(const std::vector<Frame>& frames) {
  std::vector<Axiom> out;
  for (const auto& frame : frames) {
    if (!frame.subject.is_thing()) out.push_back(Declaration{frame.kind, frame.subject});
    for (const auto& section : frame.sections) {
      if (section.kind == SectionKind::Unsupported) {
        unsupported("section '" + section.keyword + ":'", section.loc);
      }
      if (!section_allowed(frame.kind, section.kind)) {
        unsupported("section '" + section.keyword + ":' in " +
                        std::string(to_string(frame.kind)) + " frame",
                    section.loc);
      }
      for (const auto& item : section.items) out.push_back(desugar_item(frame, section, item));
    }
  }
  return out;
}

namespace {

std::string_view keyword_of(ClassExpr::Op op) {
  switch (op) {
    case ClassExpr::Op::Some: return "some";
    case ClassExpr::Op::Only: return "only";
    case ClassExpr::Op::Max: return "max";
    case ClassExpr::Op::Min: return "min";
    case ClassExpr::Op::Exactly: return "exactly";
    case ClassExpr::Op::And: return "and";
    case ClassExpr::Op::Or: return "or";
    default: return "";
  }
}

std::string atom(const ClassExpr& e) {
  if (e.is_named()) return e.name.str();
  return "(" + render_class_expr(e) + ")";
}

}  // namespace

std::string render_class_expr(const ClassExpr& e) {
  using Op = ClassExpr::Op;
  switch (e.op) {
    case Op::Named:
      return e.name.str();
    case Op::Not:
      return "not " + atom(e.operands.at(0));
    case Op::Some:
    case Op::Only:
      return e.name.str() + " " + std::string(keyword_of(e.op)) + " " + atom(e.operands.at(0));
    case Op::Max:
    case Op::Min:
    case Op::Exactly:
      return e.name.str() + " " + std::string(keyword_of(e.op)) + " " +
             std::to_string(e.cardinality) + " " + atom(e.operands.at(0));
    case Op::And:
    case Op::Or: {
      std::string out;
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i > 0) out += " " + std::string(keyword_of(e.op)) + " ";
        const auto& operand = e.operands[i];
        bool wrap = operand.op == Op::And || operand.op == Op::Or;
        out += wrap ? "(" + render_class_expr(operand) + ")" : render_class_expr(operand);
      }
      return out;
    }
  }
  return "";
}

namespace {

std::string render_item(const SectionItem& item) {
  struct Visitor {
    std::string operator()(const ClassExpr& e) const { return render_class_expr(e); }
    std::string operator()(const StructuredName& n) const { return n.str(); }
    std::string operator()(const Characteristic& c) const { return c.name; }
    std::string operator()(const Fact& f) const { return f.property.str() + " " + f.object.str(); }
  };
  return std::visit(Visitor{}, item.value);
}

std::string header(const Frame& frame) {
  return std::string(to_string(frame.kind)) + ": " + frame.subject.str();
}

std::string section_line(const Section& section) {
  std::string line = section.keyword + ":";
  for (std::size_t i = 0; i < section.items.size(); ++i) {
    line += i == 0 ? " " : ", ";
    line += render_item(section.items[i]);
  }
  return line;
}

}  // namespace

std::string print_frames(const std::vector<Frame>& frames, const std::string& indent) {
  std::string out;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (i > 0) out += "\n";
    out += indent + header(frames[i]) + "\n";
    for (const auto& section : frames[i].sections) {
      out += indent + "  " + section_line(section) + "\n";
    }
  }
  return out;
}

std::string render_axiom(const Axiom& ax) {
  auto frame_line = [](EntityKind kind, const StructuredName& subject, std::string_view section,
                       const std::string& item) {
    return std::string(to_string(kind)) + ": " + subject.str() + " " + std::string(section) +
           ": " + item;
  };
  auto class_frame = [&](const ClassExpr& subject, std::string_view section,
                         const ClassExpr& item) {
    if (!subject.is_named()) return canonical_text(ax);
    return frame_line(EntityKind::Class, subject.name, section, render_class_expr(item));
  };
  using K = EntityKind;
  if (auto* a = std::get_if<Declaration>(&ax)) {
    return std::string(to_string(a->kind)) + ": " + a->name.str();
  }
  if (auto* a = std::get_if<SubClassOf>(&ax)) return class_frame(a->sub, "SubClassOf", a->sup);
  if (auto* a = std::get_if<EquivalentClasses>(&ax)) {
    return class_frame(a->first, "EquivalentTo", a->second);
  }
  if (auto* a = std::get_if<DisjointClasses>(&ax)) {
    return class_frame(a->first, "DisjointWith", a->second);
  }
  if (auto* a = std::get_if<ObjectPropertyDomain>(&ax)) {
    return frame_line(K::ObjectProperty, a->property, "Domain", render_class_expr(a->domain));
  }
  if (auto* a = std::get_if<ObjectPropertyRange>(&ax)) {
    return frame_line(K::ObjectProperty, a->property, "Range", render_class_expr(a->range));
  }
  if (auto* a = std::get_if<InverseProperties>(&ax)) {
    return frame_line(K::ObjectProperty, a->first, "InverseOf", a->second.str());
  }
  if (auto* a = std::get_if<FunctionalProperty>(&ax)) {
    return frame_line(a->kind, a->property, "Characteristics", "Functional");
  }
  if (auto* a = std::get_if<InverseFunctionalProperty>(&ax)) {
    return frame_line(K::ObjectProperty, a->property, "Characteristics", "InverseFunctional");
  }
  if (auto* a = std::get_if<SubPropertyOf>(&ax)) {
    return frame_line(a->kind, a->sub, "SubPropertyOf", a->sup.str());
  }
  if (auto* a = std::get_if<ClassAssertion>(&ax)) {
    return frame_line(K::Individual, a->individual, "Types", render_class_expr(a->type));
  }
  const auto& a = std::get<PropertyAssertion>(ax);
  return frame_line(K::Individual, a.subject, "Facts", a.property.str() + " " + a.object.str());
}

}  // namespace godp
