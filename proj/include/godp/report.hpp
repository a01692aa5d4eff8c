#ifndef GODP_REPORT_HPP
#define GODP_REPORT_HPP

#include <string>
#include <vector>

#include "godp/expand.hpp"

namespace godp {

// Key/value text, one obligation block per instantiation site:
//
//   target: PuppyOntology
//   obligations: 1
//
//   obligation: 1
//   pattern: Refinement
//   argument: 1
//   location: 12:3
//   ontology: Taxonomy
//   fit: Sub |-> Dog
//   fit: Super |-> Animal
//   axiom: Class: Dog SubClassOf: Animal
//
// Names are stratified unless `keep_structured_names` is set.
std::string format_obligation_report(const std::string& target,
                                     const std::vector<Obligation>& obligations,
                                     bool keep_structured_names = false);

}  // namespace godp

#endif  // GODP_REPORT_HPP
