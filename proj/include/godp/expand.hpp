// Flattening: instantiation checking, substitution, pruning of omitted
// optional arguments, `then`/`and` combination and stratification.

#ifndef GODP_EXPAND_HPP
#define GODP_EXPAND_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "godp/ast.hpp"
#include "godp/ontology.hpp"
#include "godp/resolve.hpp"

namespace godp {

// Parameter symbol -> argument symbol, plus the parameters left without one.
// For ontology-valued parameters every symbol of the parameter signature is a
// key (mapped along the fitting map) or, if the argument is omitted, omitted.
struct Substitution {
  std::map<StructuredName, StructuredName> mapping;
  std::set<StructuredName> omitted;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct InstantiationSite {
  std::string pattern;
  std::size_t position = 0;  // 1-based argument position
  SourceLoc loc;
};

// Requirement axioms of an ontology-valued parameter, translated along the
// fitting map into the argument ontology. Reported, never discharged.
struct Obligation {
  InstantiationSite source;
  std::string target;
  std::vector<FitPair> fit;  // every parameter symbol, explicit or same-name
  std::vector<Axiom> axioms;
};

struct ExpansionResult {
  FlatOntology ontology;
  std::vector<Obligation> obligations;
  std::vector<Diagnostic> warnings;
};

// Tells ontology names apart from entity names for bare arguments in
// ontology-valued slots. A null predicate accepts every plain name.
using OntologyNamePredicate = std::function<bool(std::string_view)>;

// Checks argument kinds against parameter kinds position by position
// (1-based in diagnostics). Arity must already match. Throws KindMismatch,
// MissingMandatoryArgument, OntologyArgForSymbolParam,
// SymbolArgForOntologyParam or UnmappedParameterSymbol.
Substitution check_instantiation(const PatternDef& pattern, const std::vector<Arg>& args,
                                 const OntologyNamePredicate& is_ontology = {});

// Deep replacement of parameter names, also inside constituents.
StructuredName substitute(const StructuredName& name, const Substitution& s);
std::vector<Axiom> apply_substitution(const std::vector<Axiom>& axioms, const Substitution& s);

// Keeps an axiom iff none of its mentions is an omitted name; whole axioms only.
std::vector<Axiom> prune_omitted(const std::vector<Axiom>& axioms,
                                 const std::set<StructuredName>& omitted);

// Union of signatures and deduplicated concatenation of axioms; the right
// operand may use the left one's symbols. Throws ConflictingKind.
FlatOntology combine_then(const FlatOntology& left, const FlatOntology& right);
FlatOntology combine_and(const FlatOntology& left, const FlatOntology& right);

// Maps every parameter symbol (along `fit`, defaulting to the same name) to a
// symbol of the same kind in `argument`, and returns the translated
// requirement as at most one obligation. Throws UnmappedParameterSymbol,
// FitTargetUndeclared or KindMismatch.
std::vector<Obligation> conformance_check(const Param& param, const std::string& argument_name,
                                          const FlatOntology& argument,
                                          const std::vector<FitPair>& fit,
                                          const InstantiationSite& site = {});

// Flattens a named ontology. Stratification is not applied.
// Throws UnknownTarget, CyclicReference and every checker error, with the
// instantiation stack attached as notes.
ExpansionResult expand(const ResolvedLibrary& library, std::string_view target);

// Rewrites every name with stratify_name and re-deduplicates.
// Throws StratificationCollision when two distinct names meet.
FlatOntology stratify_ontology(const FlatOntology& ontology);

}  // namespace godp

#endif  // GODP_EXPAND_HPP
