#include <doctest.h>

#include "godp/diagnostics.hpp"
#include "godp/frames.hpp"
#include "godp/ontology.hpp"
#include "godp/parser.hpp"
#include "support.hpp"

using namespace godp;
using Op = ClassExpr::Op;

namespace {

ClassExpr C(const std::string& n) { return ClassExpr::named(StructuredName(n)); }
StructuredName N(const std::string& n) { return StructuredName(n); }

std::vector<Axiom> desugar(const std::string& text) { return desugar_frames(parse_frames(text)); }

ErrorKind error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("desugaring: one axiom per clause element") {
  auto axioms = desugar("ObjectProperty: drives Domain: Person Range: Vehicle");
  REQUIRE(axioms.size() == 3);
  CHECK(axioms[0] == Axiom(Declaration{EntityKind::ObjectProperty, N("drives")}));
  CHECK(axioms[1] == Axiom(ObjectPropertyDomain{N("drives"), C("Person")}));
  CHECK(axioms[2] == Axiom(ObjectPropertyRange{N("drives"), C("Vehicle")}));

  CHECK(desugar("Class: C") == std::vector<Axiom>{Declaration{EntityKind::Class, N("C")}});

  auto prof = desugar(R"(
    Class: ProfRole
      SubClassOf: roleProvidedBy_University max 1 University,
                  rolePerformedBy_Professor max 1 Professor,
                  hasTemporalExtent some TemporalExtent,
                  hasTemporalExtent only TemporalExtent
      SubClassOf: roleProvidedBy_University some University
               or rolePerformedBy_Professor some Professor)");
  REQUIRE(prof.size() == 6);
  CHECK(std::holds_alternative<Declaration>(prof[0]));
  for (std::size_t i = 1; i < 6; ++i) CHECK(std::holds_alternative<SubClassOf>(prof[i]));
  CHECK(std::get<SubClassOf>(prof[5]).sup.op == Op::Or);
}

TEST_CASE("desugaring: remaining frame sections") {
  auto axioms = desugar(R"(
    ObjectProperty: p
      Characteristics: Functional, InverseFunctional
      InverseOf: q
      SubPropertyOf: r
    DataProperty: age
      Characteristics: Functional
    Individual: mary
      Types: Person, not Vehicle
      Facts: p bob
    Class: A
      EquivalentTo: B and C
      DisjointWith: D)");
  std::vector<Axiom> expected{
      Declaration{EntityKind::ObjectProperty, N("p")},
      FunctionalProperty{EntityKind::ObjectProperty, N("p")},
      InverseFunctionalProperty{N("p")},
      InverseProperties{N("p"), N("q")},
      SubPropertyOf{EntityKind::ObjectProperty, N("p"), N("r")},
      Declaration{EntityKind::DataProperty, N("age")},
      FunctionalProperty{EntityKind::DataProperty, N("age")},
      Declaration{EntityKind::Individual, N("mary")},
      ClassAssertion{C("Person"), N("mary")},
      ClassAssertion{ClassExpr::negation(C("Vehicle")), N("mary")},
      PropertyAssertion{N("p"), N("mary"), N("bob")},
      Declaration{EntityKind::Class, N("A")},
      EquivalentClasses{C("A"), ClassExpr::nary(Op::And, {C("B"), C("C")})},
      DisjointClasses{C("A"), C("D")},
  };
  CHECK(axioms == expected);
}

TEST_CASE("unsupported sections and constructs") {
  CHECK(error_of([] { desugar("Class: A Annotations: label"); }) == ErrorKind::UnsupportedConstruct);
  CHECK(error_of([] { desugar("ObjectProperty: p Characteristics: Transitive"); }) ==
        ErrorKind::UnsupportedConstruct);
  CHECK(error_of([] { desugar("DataProperty: d Domain: A"); }) == ErrorKind::UnsupportedConstruct);
  CHECK(error_of([] { desugar("Datatype: xsd"); }) == ErrorKind::UnsupportedConstruct);
  try {
    desugar("Class: A\n  Annotations: label");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.loc().line == 2);
    CHECK(std::string(e.what()).find("Annotations") != std::string::npos);
  }
}

TEST_CASE("emitter layout") {
  FlatOntology o = make_flat(desugar("Class: Person ObjectProperty: drives Range: Vehicle Domain: Person"));
  CHECK(emit_manchester(o) ==
        "ObjectProperty: drives\n"
        "  Domain: Person\n"
        "  Range: Vehicle\n"
        "\n"
        "Class: Person\n");
  CHECK(emit_manchester(FlatOntology{}).empty());
}

TEST_CASE("emitter orders frames by kind then name and sections canonically") {
  FlatOntology o = make_flat(desugar(R"(
    Individual: zed Types: B
    Class: B DisjointWith: A SubClassOf: A
    Class: A
    DataProperty: d
    ObjectProperty: q InverseOf: p Range: A Domain: B Characteristics: Functional
    ObjectProperty: p)"));
  CHECK(emit_manchester(o) ==
        "ObjectProperty: p\n"
        "\n"
        "ObjectProperty: q\n"
        "  Characteristics: Functional\n"
        "  Domain: B\n"
        "  Range: A\n"
        "  InverseOf: p\n"
        "\n"
        "DataProperty: d\n"
        "\n"
        "Class: A\n"
        "\n"
        "Class: B\n"
        "  SubClassOf: A\n"
        "  DisjointWith: A\n"
        "\n"
        "Individual: zed\n"
        "  Types: B\n");
}

TEST_CASE("structured names are refused unless allowed") {
  StructuredName rpb(std::string("rolePerformedBy"), {{N("Agent")}});
  FlatOntology o = make_flat({Declaration{EntityKind::ObjectProperty, rpb}});
  CHECK(error_of([&] { emit_manchester(o); }) == ErrorKind::UnstratifiedName);
  CHECK(emit_manchester(o, {.allow_structured_names = true}) == "ObjectProperty: rolePerformedBy[Agent]\n");
}

TEST_CASE("emission is deterministic and round-trips [property]") {
  support::Gen g(201);
  for (int i = 0; i < 300; ++i) {
    FlatOntology o = support::typed_ontology(g);
    std::string first = emit_manchester(o);
    CHECK(first == emit_manchester(o));
    CHECK(first == emit_manchester(FlatOntology(o)));
    auto back = desugar(first);
    CHECK(support::axiom_multiset(back) == support::axiom_multiset(o.axioms));
  }
}

TEST_CASE("fixture ontologies round-trip through the emitter [property]") {
  for (const std::string file : {"driving.gdol", "role.gdol", "obligations.gdol"}) {
    auto lib = support::load(file);
    for (const auto& item : lib.library.items) {
      if (item.is_pattern) continue;
      CAPTURE(item.name());
      FlatOntology o = support::flatten_stratified(lib, item.name());
      std::string text = emit_manchester(o);
      CHECK(support::axiom_set(desugar(text)) == support::axiom_set(o.axioms));
      CHECK(text == emit_manchester(support::flatten_stratified(lib, item.name())));
    }
  }
}
