// Manchester-syntax frames as parsed, their desugaring into atomic axioms,
// and their textual rendering.

#ifndef GODP_FRAMES_HPP
#define GODP_FRAMES_HPP

#include <string>
#include <variant>
#include <vector>

#include "godp/axiom.hpp"
#include "godp/diagnostics.hpp"
#include "godp/name.hpp"

namespace godp {

enum class SectionKind {
  Characteristics,
  Domain,
  Range,
  InverseOf,
  SubPropertyOf,
  SubClassOf,
  EquivalentTo,
  DisjointWith,
  Types,
  Facts,
  Unsupported,
};

std::string_view to_string(SectionKind kind);

struct Fact {
  StructuredName property, object;
  friend bool operator==(const Fact&, const Fact&) = default;
};

// A characteristic is kept as written; unknown ones are rejected by desugaring.
struct Characteristic {
  std::string name;
  friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

struct SectionItem {
  std::variant<ClassExpr, StructuredName, Characteristic, Fact> value;
  SourceLoc loc;
  friend bool operator==(const SectionItem&, const SectionItem&) = default;
};

struct Section {
  SectionKind kind = SectionKind::Unsupported;
  std::string keyword;  // as written, used in diagnostics
  std::vector<SectionItem> items;
  SourceLoc loc;
  friend bool operator==(const Section&, const Section&) = default;
};

struct Frame {
  EntityKind kind = EntityKind::Class;
  StructuredName subject;
  std::vector<Section> sections;
  SourceLoc loc;
  friend bool operator==(const Frame&, const Frame&) = default;
};

// One Declaration per header, one axiom per section item, in textual order.
// Throws Error(UnsupportedConstruct) for sections the subset does not cover.
std::vector<Axiom> desugar_frames(const std::vector<Frame>& frames);

std::string render_class_expr(const ClassExpr& e);

// Frames separated by blank lines, one section per line, two-space indent.
// Every line, including the last, ends with '\n'. `indent` prefixes each line.
std::string print_frames(const std::vector<Frame>& frames, const std::string& indent = "");

// A single axiom as a one-line frame, e.g. `Class: A SubClassOf: B`.
std::string render_axiom(const Axiom& ax);

}  // namespace godp

#endif  // GODP_FRAMES_HPP
