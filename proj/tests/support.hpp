#ifndef GODP_TESTS_SUPPORT_HPP
#define GODP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "godp/axiom.hpp"
#include "godp/expand.hpp"
#include "godp/frames.hpp"
#include "godp/ontology.hpp"
#include "godp/parser.hpp"
#include "godp/resolve.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) {
  return std::string(GODP_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline godp::ResolvedLibrary load(const std::string& fixture) {
  return godp::resolve(godp::parse_library(read_fixture(fixture)));
}

inline godp::FlatOntology flatten(const godp::ResolvedLibrary& lib, const std::string& target) {
  return godp::expand(lib, target).ontology;
}

inline godp::FlatOntology flatten_stratified(const godp::ResolvedLibrary& lib,
                                             const std::string& target) {
  return godp::stratify_ontology(flatten(lib, target));
}

// Normalized canonical text of each axiom; the set is the comparison unit.
inline std::set<std::string> axiom_set(const std::vector<godp::Axiom>& axioms) {
  std::set<std::string> out;
  for (const auto& ax : axioms) out.insert(godp::canonical_text(godp::normalize_axiom(ax)));
  return out;
}

inline std::multiset<std::string> axiom_multiset(const std::vector<godp::Axiom>& axioms) {
  std::multiset<std::string> out;
  for (const auto& ax : axioms) out.insert(godp::canonical_text(godp::normalize_axiom(ax)));
  return out;
}

inline std::set<std::string> frames_set(const std::string& manchester) {
  return axiom_set(godp::desugar_frames(godp::parse_frames(manchester)));
}

// Seeded random generators. Names come from small pools so that collisions
// and duplicate operands actually happen.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(int percent) { return below(100) < percent; }

  template <class T>
  const T& pick(const std::vector<T>& pool) {
    return pool[static_cast<std::size_t>(below(static_cast<int>(pool.size())))];
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  // Plain names come from `plain`; structured names take a base from
  // a fixed pool disjoint from every plain pool, constituents from `leaves`, nested up to `depth`.
  godp::StructuredName name(const std::vector<std::string>& plain,
                            const std::vector<std::string>& leaves, int structured_percent,
                            int depth = 2) {
    if (depth == 0 || !chance(structured_percent)) return godp::StructuredName(pick(plain));
    std::vector<godp::StructuredName::Group> groups(static_cast<std::size_t>(1 + below(2)));
    for (auto& g : groups) {
      int n = 1 + below(2);
      for (int i = 0; i < n; ++i) {
        g.push_back(depth > 1 && chance(25) ? name(leaves, leaves, 100, depth - 1)
                                            : godp::StructuredName(pick(leaves)));
      }
    }
    return godp::StructuredName(pick(structured_bases_), std::move(groups));
  }

  void set_leaves(std::vector<std::string> leaves) { leaves_ = std::move(leaves); }

  godp::ClassExpr class_expr(const std::vector<std::string>& classes,
                             const std::vector<std::string>& props, int depth,
                             int structured_percent = 0) {
    using Op = godp::ClassExpr::Op;
    auto cls = [&] {
      if (chance(8)) return godp::ClassExpr::thing();
      return godp::ClassExpr::named(name(classes, leaves_, structured_percent));
    };
    if (depth == 0 || chance(35)) return cls();
    auto prop = [&] { return name(props, leaves_, structured_percent); };
    switch (below(7)) {
      case 0: return godp::ClassExpr::restriction(Op::Some, prop(), class_expr(classes, props, depth - 1, structured_percent));
      case 1: return godp::ClassExpr::restriction(Op::Only, prop(), class_expr(classes, props, depth - 1, structured_percent));
      case 2: {
        Op op = pick(std::vector<Op>{Op::Max, Op::Min, Op::Exactly});
        return godp::ClassExpr::restriction(op, prop(), class_expr(classes, props, depth - 1, structured_percent),
                                            static_cast<unsigned>(below(4)));
      }
      case 3: return godp::ClassExpr::negation(class_expr(classes, props, depth - 1, structured_percent));
      default: {
        std::vector<godp::ClassExpr> ops;
        int n = 2 + below(3);
        for (int i = 0; i < n; ++i) ops.push_back(class_expr(classes, props, depth - 1, structured_percent));
        return godp::ClassExpr::nary(chance(50) ? Op::And : Op::Or, std::move(ops));
      }
    }
  }

  // Any axiom shape, names possibly structured.
  godp::Axiom axiom(const std::vector<std::string>& classes, const std::vector<std::string>& props,
                    const std::vector<std::string>& individuals, int structured_percent = 0) {
    using K = godp::EntityKind;
    auto ce = [&] { return class_expr(classes, props, 3, structured_percent); };
    auto c = [&] { return name(classes, leaves_, structured_percent); };
    auto p = [&] { return name(props, leaves_, structured_percent); };
    auto i = [&] { return name(individuals, leaves_, structured_percent); };
    switch (below(12)) {
      case 0: return godp::Declaration{pick(std::vector<K>{K::Class, K::ObjectProperty, K::Individual}), c()};
      case 1: return godp::SubClassOf{ce(), ce()};
      case 2: return godp::EquivalentClasses{ce(), ce()};
      case 3: return godp::DisjointClasses{ce(), ce()};
      case 4: return godp::ObjectPropertyDomain{p(), ce()};
      case 5: return godp::ObjectPropertyRange{p(), ce()};
      case 6: return godp::InverseProperties{p(), p()};
      case 7: return godp::FunctionalProperty{K::ObjectProperty, p()};
      case 8: return godp::InverseFunctionalProperty{p()};
      case 9: return godp::SubPropertyOf{K::ObjectProperty, p(), p()};
      case 10: return godp::ClassAssertion{ce(), i()};
      default: return godp::PropertyAssertion{p(), i(), i()};
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> leaves_{"A", "B", "C"};
  std::vector<std::string> structured_bases_{"rel", "RolePerformedBySome", "roleProvidedBy"};
};

inline const std::vector<std::string> kClasses{"A", "B", "C", "D", "Person", "Role"};
inline const std::vector<std::string> kProps{"p", "q", "r", "drives"};
inline const std::vector<std::string> kIndividuals{"a", "b", "mary"};

// Reorders every commutative operand list, recursively. Used to build
// axioms that must compare equal to the original.
inline godp::ClassExpr permute(const godp::ClassExpr& e, Gen& g) {
  godp::ClassExpr out = e;
  for (auto& op : out.operands) op = permute(op, g);
  if (out.op == godp::ClassExpr::Op::And || out.op == godp::ClassExpr::Op::Or) g.shuffle(out.operands);
  return out;
}

inline godp::Axiom permute(const godp::Axiom& ax, Gen& g) {
  return std::visit(
      [&](const auto& a) -> godp::Axiom {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, godp::SubClassOf>) {
          return godp::SubClassOf{permute(a.sub, g), permute(a.sup, g)};
        } else if constexpr (std::is_same_v<T, godp::EquivalentClasses> ||
                             std::is_same_v<T, godp::DisjointClasses>) {
          godp::ClassExpr x = permute(a.first, g), y = permute(a.second, g);
          if (g.chance(50)) std::swap(x, y);
          return T{x, y};
        } else if constexpr (std::is_same_v<T, godp::ObjectPropertyDomain>) {
          return T{a.property, permute(a.domain, g)};
        } else if constexpr (std::is_same_v<T, godp::ObjectPropertyRange>) {
          return T{a.property, permute(a.range, g)};
        } else if constexpr (std::is_same_v<T, godp::ClassAssertion>) {
          return T{permute(a.type, g), a.individual};
        } else {
          return a;
        }
      },
      ax);
}

// Typed random ontology with plain names; every frame subject is declared,
// since a header-only frame reads back as a declaration.
inline godp::FlatOntology typed_ontology(Gen& g) {
  using namespace godp;
  auto C = [](const std::string& n) { return ClassExpr::named(StructuredName(n)); };
  auto N = [](const std::string& n) { return StructuredName(n); };
  using K = EntityKind;
  const std::vector<std::string> classes{"A", "B", "C", "Person", "Vehicle"};
  const std::vector<std::string> props{"p", "q", "drives"};
  const std::vector<std::string> data{"age", "name"};
  const std::vector<std::string> inds{"a", "b", "mary"};
  auto ce = [&] { return g.class_expr(classes, props, 3); };
  auto named = [&] { return C(g.pick(classes)); };
  auto pn = [&] { return N(g.pick(props)); };
  auto in = [&] { return N(g.pick(inds)); };
  std::vector<Axiom> axioms;
  int n = 1 + g.below(12);
  for (int i = 0; i < n; ++i) {
    switch (g.below(13)) {
      case 0: axioms.push_back(SubClassOf{named(), ce()}); break;
      case 1: axioms.push_back(g.chance(50) ? Axiom(EquivalentClasses{named(), ce()})
                                            : Axiom(EquivalentClasses{ce(), named()})); break;
      case 2: axioms.push_back(DisjointClasses{named(), ce()}); break;
      case 3: axioms.push_back(ObjectPropertyDomain{pn(), ce()}); break;
      case 4: axioms.push_back(ObjectPropertyRange{pn(), ce()}); break;
      case 5: axioms.push_back(InverseProperties{pn(), pn()}); break;
      case 6: axioms.push_back(FunctionalProperty{K::ObjectProperty, pn()}); break;
      case 7: axioms.push_back(InverseFunctionalProperty{pn()}); break;
      case 8: axioms.push_back(SubPropertyOf{K::ObjectProperty, pn(), pn()}); break;
      case 9: axioms.push_back(ClassAssertion{ce(), in()}); break;
      case 10: axioms.push_back(PropertyAssertion{pn(), in(), in()}); break;
      case 11: axioms.push_back(FunctionalProperty{K::DataProperty, N(g.pick(data))}); break;
      default: axioms.push_back(SubPropertyOf{K::DataProperty, N(g.pick(data)), N(g.pick(data))}); break;
    }
  }
  FlatOntology draft = make_flat(axioms);
  std::vector<Axiom> all;
  for (const auto& [name, kind] : draft.signature) all.push_back(Declaration{kind, name});
  all.insert(all.end(), axioms.begin(), axioms.end());
  return make_flat(all);
}

}  // namespace support

#endif  // GODP_TESTS_SUPPORT_HPP
