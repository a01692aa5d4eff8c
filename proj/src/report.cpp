#include "godp/report.hpp"

#include "godp/frames.hpp"

namespace godp {

std::string format_obligation_report(const std::string& target,
                                     const std::vector<Obligation>& obligations,
                                     bool keep_structured_names) {
  auto name = [&](const StructuredName& n) {
    return keep_structured_names ? n.str() : stratify_name(n);
  };
  auto stratified = [](const StructuredName& n) { return StructuredName(stratify_name(n)); };

  std::string out = "target: " + target + "\n";
  out += "obligations: " + std::to_string(obligations.size()) + "\n";
  for (std::size_t i = 0; i < obligations.size(); ++i) {
    const Obligation& ob = obligations[i];
    out += "\nobligation: " + std::to_string(i + 1) + "\n";
    out += "pattern: " + ob.source.pattern + "\n";
    out += "argument: " + std::to_string(ob.source.position) + "\n";
    out += "location: " + std::to_string(ob.source.loc.line) + ":" +
           std::to_string(ob.source.loc.column) + "\n";
    out += "ontology: " + ob.target + "\n";
    for (const auto& pair : ob.fit) out += "fit: " + name(pair.from) + " |-> " + name(pair.to) + "\n";
    for (const auto& ax : ob.axioms) {
      out += "axiom: " + render_axiom(keep_structured_names ? ax : map_names(ax, stratified)) + "\n";
    }
  }
  return out;
}

}  // namespace godp
