#ifndef GODP_RESOLVE_HPP
#define GODP_RESOLVE_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "godp/ast.hpp"

namespace godp {

// A library whose references are bound, with per-item symbol tables.
struct ResolvedLibrary {
  Library library;
  std::map<std::string, std::size_t, std::less<>> index;
  // Items each item refers to (by position), in first-reference order.
  std::vector<std::vector<std::size_t>> dependencies;
  // Per ontology: symbols it declares, directly or through what it references.
  std::map<std::string, std::set<StructuredName>> declared;
  // Per pattern: symbols the body uses that are neither parameters, declared
  // in the body, passed to nested instantiations, nor declared by referenced
  // ontologies. Reported as warnings.
  std::map<std::string, std::vector<StructuredName>> free_symbols;

  const Item* find(std::string_view name) const;
};

// Binds every reference, checks arity and definition order.
// Throws UnresolvedReference, ArityMismatch or ForwardReference. A reference
// to a later item that closes a cycle is left for detect_cycles.
ResolvedLibrary resolve(const Library& library);

// Every strongly connected group of mutually referencing items (including
// self references), each listed in file order. Empty means expansion terminates.
std::vector<std::vector<std::string>> detect_cycles(const ResolvedLibrary& library);

// Throws CyclicReference for the first cycle, if any.
void check_acyclic(const ResolvedLibrary& library);

}  // namespace godp

#endif  // GODP_RESOLVE_HPP
