// Syntax tree of a pattern library.

#ifndef GODP_AST_HPP
#define GODP_AST_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "godp/axiom.hpp"
#include "godp/diagnostics.hpp"
#include "godp/frames.hpp"
#include "godp/name.hpp"
#include "godp/ontology.hpp"

namespace godp {

// `[Class: X]`, `[Class: X ?]` or `[ontology { frames }]`.
struct Param {
  bool is_ontology = false;
  EntityKind kind = EntityKind::Class;  // single-symbol params
  StructuredName name;                  // single-symbol params; always plain
  bool optional = false;
  std::vector<Frame> frames;  // ontology params, as written
  SourceLoc loc;

  // Ontology params: the symbols of the frames and the non-declaration axioms
  // they state (the requirement). Derived from `frames` at parse time.
  Signature signature;
  std::vector<Axiom> requirement;

  friend bool operator==(const Param&, const Param&) = default;
};

struct FitPair {
  StructuredName from, to;
  friend bool operator==(const FitPair&, const FitPair&) = default;
};

struct Arg {
  enum class Kind { Symbol, Ontology, Omitted };

  Kind kind = Kind::Omitted;
  std::optional<EntityKind> annotation;  // Symbol: `Class: X`
  StructuredName name;                   // Symbol name or ontology name
  std::vector<FitPair> fit;              // Ontology only
  SourceLoc loc;

  friend bool operator==(const Arg&, const Arg&) = default;
};

struct OntologyExpr {
  enum class Kind { Basic, Then, And, Instantiate, Ref };

  Kind kind = Kind::Basic;
  std::vector<Frame> frames;          // Basic
  std::vector<OntologyExpr> operands;  // Then/And: left, right
  std::string target;                 // Instantiate/Ref
  std::vector<Arg> args;              // Instantiate
  SourceLoc loc;

  static OntologyExpr basic(std::vector<Frame> frames, SourceLoc loc = {});
  static OntologyExpr binary(Kind kind, OntologyExpr left, OntologyExpr right, SourceLoc loc = {});
  static OntologyExpr ref(std::string target, SourceLoc loc = {});
  static OntologyExpr instantiate(std::string target, std::vector<Arg> args, SourceLoc loc = {});

  friend bool operator==(const OntologyExpr&, const OntologyExpr&) = default;
};

struct OntologyDef {
  std::string name;
  OntologyExpr body;
  SourceLoc loc;
  friend bool operator==(const OntologyDef&, const OntologyDef&) = default;
};

struct PatternDef {
  std::string name;
  std::vector<Param> params;
  OntologyExpr body;
  SourceLoc loc;
  friend bool operator==(const PatternDef&, const PatternDef&) = default;
};

struct Item {
  bool is_pattern = false;
  OntologyDef ontology;
  PatternDef pattern;

  const std::string& name() const { return is_pattern ? pattern.name : ontology.name; }
  SourceLoc loc() const { return is_pattern ? pattern.loc : ontology.loc; }
  const OntologyExpr& body() const { return is_pattern ? pattern.body : ontology.body; }
  friend bool operator==(const Item&, const Item&) = default;
};

struct Library {
  std::string name;
  std::vector<Item> items;
  friend bool operator==(const Library&, const Library&) = default;
};

// `[Class Role][Class Provider?]`-style summary of a parameter list.
std::string param_signature(const std::vector<Param>& params);

}  // namespace godp

#endif  // GODP_AST_HPP
