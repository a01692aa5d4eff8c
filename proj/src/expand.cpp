#include "godp/expand.hpp"

#include <algorithm>

namespace godp {

namespace {

std::string kind_name(EntityKind k) { return std::string(to_string(k)); }

std::string position_text(std::size_t position) {
  return "argument " + std::to_string(position);
}

bool mentions_any(const StructuredName& name, const std::set<StructuredName>& names) {
  if (names.empty()) return false;
  std::vector<StructuredName> closure;
  collect_closure(name, closure);
  return std::any_of(closure.begin(), closure.end(),
                     [&](const StructuredName& n) { return names.contains(n); });
}

}  // namespace

Substitution check_instantiation(const PatternDef& pattern, const std::vector<Arg>& args,
                                 const OntologyNamePredicate& is_ontology) {
  Substitution s;
  for (std::size_t i = 0; i < pattern.params.size() && i < args.size(); ++i) {
    const Param& param = pattern.params[i];
    const Arg& arg = args[i];
    const std::size_t position = i + 1;
    const std::string where = position_text(position) + " of '" + pattern.name + "'";

    if (arg.kind == Arg::Kind::Omitted) {
      if (!param.optional) {
        throw Error(ErrorKind::MissingMandatoryArgument,
                    where + " is mandatory and cannot be omitted", arg.loc);
      }
      if (param.is_ontology) {
        for (const auto& [name, kind] : param.signature) s.omitted.insert(name);
      } else {
        s.omitted.insert(param.name);
      }
      continue;
    }

    if (!param.is_ontology) {
      if (arg.kind == Arg::Kind::Ontology) {
        throw Error(ErrorKind::OntologyArgForSymbolParam,
                    where + " expects a " + kind_name(param.kind) + " symbol, got ontology '" +
                        arg.name.str() + "' with a fitting map",
                    arg.loc);
      }
      if (arg.annotation && *arg.annotation != param.kind) {
        throw Error(ErrorKind::KindMismatch,
                    where + ": expected " + kind_name(param.kind) + ", got " +
                        kind_name(*arg.annotation),
                    arg.loc);
      }
      s.mapping[param.name] = arg.name;
      continue;
    }

    // Ontology-valued parameter.
    bool names_ontology = arg.kind == Arg::Kind::Ontology ||
                          (!arg.annotation && arg.name.is_plain() &&
                           (!is_ontology || is_ontology(arg.name.str())));
    if (!names_ontology) {
      throw Error(ErrorKind::SymbolArgForOntologyParam,
                  where + " expects an ontology, got symbol '" + arg.name.str() + "'", arg.loc);
    }
    for (const auto& pair : arg.fit) {
      if (!param.signature.contains(pair.from)) {
        throw Error(ErrorKind::UnmappedParameterSymbol,
                    "fitting map of " + where + " maps '" + pair.from.str() +
                        "', which is not a symbol of the parameter",
                    arg.loc);
      }
    }
    for (const auto& [name, kind] : param.signature) {
      auto it = std::find_if(arg.fit.begin(), arg.fit.end(),
                             [&](const FitPair& p) { return p.from == name; });
      s.mapping[name] = it == arg.fit.end() ? name : it->to;
    }
  }
  return s;
}

StructuredName substitute(const StructuredName& name, const Substitution& s) {
  if (name.is_plain()) {
    auto it = s.mapping.find(name);
    return it == s.mapping.end() ? name : it->second;
  }
  std::vector<StructuredName::Group> groups;
  groups.reserve(name.groups().size());
  for (const auto& group : name.groups()) {
    StructuredName::Group out;
    out.reserve(group.size());
    for (const auto& c : group) out.push_back(substitute(c, s));
    groups.push_back(std::move(out));
  }
  return StructuredName(name.base(), std::move(groups));
}

std::vector<Axiom> apply_substitution(const std::vector<Axiom>& axioms, const Substitution& s) {
  std::vector<Axiom> out;
  out.reserve(axioms.size());
  auto fn = [&](const StructuredName& n) { return substitute(n, s); };
  for (const auto& ax : axioms) out.push_back(map_names(ax, fn));
  return out;
}

std::vector<Axiom> prune_omitted(const std::vector<Axiom>& axioms,
                                 const std::set<StructuredName>& omitted) {
  if (omitted.empty()) return axioms;
  std::vector<Axiom> out;
  for (const auto& ax : axioms) {
    auto names = mentions(ax);
    bool hit = std::any_of(names.begin(), names.end(),
                           [&](const StructuredName& n) { return omitted.contains(n); });
    if (!hit) out.push_back(ax);
  }
  return out;
}

namespace {

FlatOntology combine(const FlatOntology& left, const FlatOntology& right) {
  FlatOntology out;
  out.signature = left.signature;
  merge_signature(out.signature, right.signature);
  std::vector<Axiom> all = left.axioms;
  all.insert(all.end(), right.axioms.begin(), right.axioms.end());
  out.axioms = deduplicate(all);
  return out;
}

}  // namespace

FlatOntology combine_then(const FlatOntology& left, const FlatOntology& right) {
  return combine(left, right);
}

FlatOntology combine_and(const FlatOntology& left, const FlatOntology& right) {
  return combine(left, right);
}

std::vector<Obligation> conformance_check(const Param& param, const std::string& argument_name,
                                          const FlatOntology& argument,
                                          const std::vector<FitPair>& fit,
                                          const InstantiationSite& site) {
  Substitution translation;
  std::vector<FitPair> effective;
  for (const auto& pair : fit) {
    if (!param.signature.contains(pair.from)) {
      throw Error(ErrorKind::UnmappedParameterSymbol,
                  "fitting map entry '" + pair.from.str() + "' is not a parameter symbol",
                  site.loc);
    }
  }
  for (const auto& [name, kind] : param.signature) {
    auto it = std::find_if(fit.begin(), fit.end(), [&](const FitPair& p) { return p.from == name; });
    const bool explicit_fit = it != fit.end();
    const StructuredName target = explicit_fit ? it->to : name;
    auto found = argument.signature.find(target);
    if (found == argument.signature.end()) {
      if (explicit_fit) {
        throw Error(ErrorKind::FitTargetUndeclared,
                    "'" + name.str() + "' is fitted to '" + target.str() +
                        "', which ontology '" + argument_name + "' does not declare",
                    site.loc);
      }
      throw Error(ErrorKind::UnmappedParameterSymbol,
                  "parameter symbol '" + name.str() + "' has no fitting entry and ontology '" +
                      argument_name + "' has no symbol of that name",
                  site.loc);
    }
    if (found->second != kind) {
      throw Error(ErrorKind::KindMismatch,
                  "parameter symbol '" + name.str() + "' is a " + kind_name(kind) + " but '" +
                      target.str() + "' is a " + kind_name(found->second) + " in '" +
                      argument_name + "'",
                  site.loc);
    }
    translation.mapping[name] = target;
    effective.push_back({name, target});
  }
  if (param.requirement.empty()) return {};
  Obligation obligation;
  obligation.source = site;
  obligation.target = argument_name;
  obligation.fit = std::move(effective);
  obligation.axioms = apply_substitution(param.requirement, translation);
  return {std::move(obligation)};
}

namespace {

class Expander {
 public:
  explicit Expander(const ResolvedLibrary& library) : library_(library) {}

  FlatOntology named(const std::string& name, SourceLoc use) {
    if (auto it = memo_.find(name); it != memo_.end()) return it->second;
    const Item* item = library_.find(name);
    if (!item || item->is_pattern) {
      throw Error(ErrorKind::UnknownTarget, "'" + name + "' is not an ontology of the library", use);
    }
    if (!in_progress_.insert(name).second) {
      throw Error(ErrorKind::CyclicReference, "ontology '" + name + "' refers to itself", use);
    }
    FlatOntology result;
    try {
      result = eval(item->ontology.body, nullptr);
    } catch (Error& e) {
      e.locate(item->ontology.loc);
      throw;
    }
    in_progress_.erase(name);
    memo_.emplace(name, result);
    return result;
  }

  std::vector<Obligation> take_obligations() { return std::move(obligations_); }

 private:
  // `s` is null outside pattern bodies.
  FlatOntology eval(const OntologyExpr& e, const Substitution* s) {
    using K = OntologyExpr::Kind;
    try {
      switch (e.kind) {
        case K::Basic: {
          auto axioms = desugar_frames(e.frames);
          if (s) axioms = apply_substitution(prune_omitted(axioms, s->omitted), *s);
          return make_flat(axioms);
        }
        case K::Then:
          return combine_then(eval(e.operands.at(0), s), eval(e.operands.at(1), s));
        case K::And:
          return combine_and(eval(e.operands.at(0), s), eval(e.operands.at(1), s));
        case K::Ref:
          return named(e.target, e.loc);
        case K::Instantiate: {
          if (!s) return instantiate(e.target, e.args, e.loc);
          std::vector<Arg> args = e.args;
          for (auto& arg : args) {
            if (mentions_any(arg.name, s->omitted)) return {};
            for (const auto& pair : arg.fit) {
              if (mentions_any(pair.to, s->omitted)) return {};
            }
            if (arg.kind == Arg::Kind::Symbol) arg.name = substitute(arg.name, *s);
            for (auto& pair : arg.fit) pair.to = substitute(pair.to, *s);
          }
          return instantiate(e.target, args, e.loc);
        }
      }
    } catch (Error& err) {
      err.locate(e.loc);
      throw;
    }
    return {};
  }

  FlatOntology instantiate(const std::string& target, const std::vector<Arg>& args, SourceLoc loc) {
    const Item* item = library_.find(target);
    if (!item) throw Error(ErrorKind::UnresolvedReference, "unknown pattern '" + target + "'", loc);
    if (!item->is_pattern || item->pattern.params.size() != args.size()) {
      std::size_t expected = item->is_pattern ? item->pattern.params.size() : 0;
      throw Error(ErrorKind::ArityMismatch,
                  "'" + target + "' expects " + std::to_string(expected) + " arguments, got " +
                      std::to_string(args.size()),
                  loc);
    }
    const PatternDef& pattern = item->pattern;
    try {
      auto is_ontology = [&](std::string_view name) {
        const Item* found = library_.find(name);
        return found && !found->is_pattern;
      };
      Substitution s = check_instantiation(pattern, args, is_ontology);

      FlatOntology result;
      for (std::size_t i = 0; i < args.size(); ++i) {
        const Param& param = pattern.params[i];
        if (!param.is_ontology || args[i].kind == Arg::Kind::Omitted) continue;
        const std::string argument = args[i].name.str();
        FlatOntology flat = named(argument, args[i].loc);
        InstantiationSite site{pattern.name, i + 1, args[i].loc};
        for (auto& ob : conformance_check(param, argument, flat, args[i].fit, site)) {
          obligations_.push_back(std::move(ob));
        }
        result = combine_then(result, flat);
      }

      result = combine_then(result, eval(pattern.body, &s));
      for (std::size_t i = 0; i < args.size(); ++i) {
        const Param& param = pattern.params[i];
        if (param.is_ontology || args[i].kind == Arg::Kind::Omitted) continue;
        add_symbol(result.signature, s.mapping.at(param.name), param.kind);
      }
      return result;
    } catch (Error& e) {
      e.locate(loc);
      e.add_note(loc, "in instantiation of '" + target + "'");
      throw;
    }
  }

  const ResolvedLibrary& library_;
  std::map<std::string, FlatOntology> memo_;
  std::set<std::string> in_progress_;
  std::vector<Obligation> obligations_;
};

}  // namespace

ExpansionResult expand(const ResolvedLibrary& library, std::string_view target) {
  const Item* item = library.find(target);
  if (!item) {
    throw Error(ErrorKind::UnknownTarget, "no ontology named '" + std::string(target) + "'");
  }
  if (item->is_pattern) {
    throw Error(ErrorKind::UnknownTarget,
                "'" + std::string(target) + "' is a pattern; flatten an ontology that instantiates it",
                item->loc());
  }
  check_acyclic(library);
  Expander expander(library);
  ExpansionResult result;
  result.ontology = expander.named(std::string(target), item->loc());
  result.obligations = expander.take_obligations();
  for (const auto& name : undeclared_symbols(result.ontology)) {
    result.warnings.push_back({Severity::Warning, "UndeclaredSymbol",
                               "'" + name.str() + "' is used in '" + std::string(target) +
                                   "' but never declared",
                               item->loc()});
  }
  return result;
}

FlatOntology stratify_ontology(const FlatOntology& ontology) {
  std::map<std::string, StructuredName> seen;
  for (const auto& [name, kind] : ontology.signature) {
    std::string flat = stratify_name(name);
    auto [it, inserted] = seen.emplace(flat, name);
    if (!inserted) {
      throw Error(ErrorKind::StratificationCollision,
                  "'" + it->second.str() + "' and '" + name.str() + "' both stratify to '" + flat +
                      "'");
    }
  }
  std::vector<Axiom> axioms;
  axioms.reserve(ontology.axioms.size());
  auto fn = [](const StructuredName& n) { return StructuredName(stratify_name(n)); };
  for (const auto& ax : ontology.axioms) axioms.push_back(map_names(ax, fn));
  FlatOntology out;
  out.axioms = deduplicate(axioms);
  for (const auto& [name, kind] : ontology.signature) add_symbol(out.signature, fn(name), kind);
  return out;
}

}  // namespace godp
