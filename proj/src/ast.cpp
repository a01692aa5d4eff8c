#include "godp/ast.hpp"

namespace godp {

OntologyExpr OntologyExpr::basic(std::vector<Frame> frames, SourceLoc loc) {
  OntologyExpr e;
  e.kind = Kind::Basic;
  e.frames = std::move(frames);
  e.loc = loc;
  return e;
}

OntologyExpr OntologyExpr::binary(Kind kind, OntologyExpr left, OntologyExpr right, SourceLoc loc) {
  OntologyExpr e;
  e.kind = kind;
  e.operands.push_back(std::move(left));
  e.operands.push_back(std::move(right));
  e.loc = loc;
  return e;
}

OntologyExpr OntologyExpr::ref(std::string target, SourceLoc loc) {
  OntologyExpr e;
  e.kind = Kind::Ref;
  e.target = std::move(target);
  e.loc = loc;
  return e;
}

OntologyExpr OntologyExpr::instantiate(std::string target, std::vector<Arg> args, SourceLoc loc) {
  OntologyExpr e;
  e.kind = Kind::Instantiate;
  e.target = std::move(target);
  e.args = std::move(args);
  e.loc = loc;
  return e;
}

std::string param_signature(const std::vector<Param>& params) {
  std::string out;
  for (const auto& p : params) {
    out += "[";
    if (p.is_ontology) {
      out += "ontology {";
      bool first = true;
      for (const auto& [name, kind] : p.signature) {
        if (!first) out += ", ";
        first = false;
        out += std::string(to_string(kind)) + " " + name.str();
      }
      out += "}";
    } else {
      out += std::string(to_string(p.kind)) + " " + p.name.str();
    }
    if (p.optional) out += "?";
    out += "]";
  }
  return out;
}

}  // namespace godp
