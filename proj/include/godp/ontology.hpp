#ifndef GODP_ONTOLOGY_HPP
#define GODP_ONTOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "godp/axiom.hpp"
#include "godp/name.hpp"

namespace godp {

using Signature = std::map<StructuredName, EntityKind>;

// A signature plus an ordered list of pairwise non-equal (after
// normalization) axioms.
struct FlatOntology {
  Signature signature;
  std::vector<Axiom> axioms;

  bool empty() const { return signature.empty() && axioms.empty(); }
  friend bool operator==(const FlatOntology&, const FlatOntology&) = default;
};

// Adds name:kind, throwing ConflictingKind if name already has another kind.
void add_symbol(Signature& signature, const StructuredName& name, EntityKind kind);

// Unions `from` into `into` under the same conflict rule.
void merge_signature(Signature& into, const Signature& from);

// Drops later axioms that are normalization-equal to an earlier one.
std::vector<Axiom> deduplicate(const std::vector<Axiom>& axioms);

// Deduplicates and derives the signature from the axioms' entity positions.
FlatOntology make_flat(const std::vector<Axiom>& axioms);

// Names used in the ontology without a Declaration axiom, sorted.
std::vector<StructuredName> undeclared_symbols(const FlatOntology& ontology);

struct EmitOptions {
  // Render bracketed names literally instead of rejecting them.
  bool allow_structured_names = false;
};

// Deterministic Manchester text: object properties, data properties, classes,
// individuals, each alphabetical; fixed section order inside each frame.
// Throws UnstratifiedName if a bracketed name remains and is not allowed.
std::string emit_manchester(const FlatOntology& ontology, const EmitOptions& options = {});

}  // namespace godp

#endif  // GODP_ONTOLOGY_HPP
