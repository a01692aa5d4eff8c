#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "godp/cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "godp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = godp::run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string fx(const std::string& name) { return support::fixture_path(name); }

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "godp-cli-tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_scratch(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("flatten writes Manchester text and warnings go to stderr") {
  Outcome r = run_args({"flatten", fx("driving.gdol"), "--target", "drivePatternInstance"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "ObjectProperty: drives\n"
        "  Domain: Person\n"
        "  Range: Vehicle\n");
  CHECK(r.err.find("warning: UndeclaredSymbol") != std::string::npos);
  CHECK(r.err.find(fx("driving.gdol") + ":22:1: ") != std::string::npos);
}

TEST_CASE("flatten of the ProfRole ontology stratifies names") {
  Outcome r = run_args({"flatten", fx("role.gdol"), "-t", "ProfRoleOntology"});
  CHECK(r.status == 0);
  CHECK(r.out.find("roleProvidedBy_University max 1 University") != std::string::npos);
  CHECK(r.out.find('[') == std::string::npos);
  Outcome raw = run_args({"flatten", fx("role.gdol"), "-t", "ProfRoleOntology", "--keep-structured-names"});
  CHECK(raw.status == 0);
  CHECK(raw.out.find("roleProvidedBy[University] max 1 University") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* target : {"ThematicRoles", "ProfRoleOntology", "MotherRoleDecomposed"}) {
    Outcome a = run_args({"flatten", fx("role.gdol"), "-t", target});
    Outcome b = run_args({"flatten", fx("role.gdol"), "-t", target});
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
  CHECK(run_args({"list", fx("role.gdol")}).out == run_args({"list", fx("role.gdol")}).out);
}

TEST_CASE("usage and target errors exit 2") {
  CHECK(run_args({"flatten", fx("driving.gdol")}).status == 2);
  CHECK(run_args({"obligations", fx("driving.gdol")}).status == 2);
  CHECK(run_args({"flatten", fx("driving.gdol"), "-t", "Nope"}).status == 2);
  CHECK(run_args({"obligations", fx("driving.gdol"), "-t", "Nope"}).status == 2);
  CHECK(run_args({"explode", fx("driving.gdol")}).status == 2);
  CHECK(run_args({}).status == 2);
}

TEST_CASE("check: clean library and every error fixture") {
  CHECK(run_args({"check", fx("role.gdol")}).status == 0);
  CHECK(run_args({"check", fx("driving.gdol")}).status == 0);
  const std::vector<std::pair<std::string, std::string>> cases{
      {"kind_mismatch.gdol", "KindMismatch"},       {"arity_mismatch.gdol", "ArityMismatch"},
      {"missing_argument.gdol", "MissingMandatoryArgument"}, {"cycle.gdol", "CyclicReference"},
      {"collision.gdol", "StratificationCollision"}, {"conflicting_kind.gdol", "ConflictingKind"}};
  for (const auto& [file, code] : cases) {
    CAPTURE(file);
    Outcome r = run_args({"check", fx(file)});
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("error: " + code + ":") != std::string::npos);
  }
}

TEST_CASE("kind mismatch is reported at the call site") {
  Outcome r = run_args({"check", fx("kind_mismatch.gdol")});
  CHECK(r.err.find(fx("kind_mismatch.gdol") + ":10:22: error: KindMismatch") != std::string::npos);
  CHECK(r.err.find("note: in instantiation of 'SimpleRelationGODP'") != std::string::npos);
}

TEST_CASE("syntax and resolution errors exit 1") {
  fs::path bad = write_scratch("bad.gdol", "library L\nontology O = Class: end\n");
  Outcome r = run_args({"check", bad.string()});
  CHECK(r.status == 1);
  CHECK(r.err.find(":2:") != std::string::npos);
  fs::path unresolved = write_scratch("unresolved.gdol", "library L ontology O = Missing end");
  CHECK(run_args({"check", unresolved.string()}).status == 1);
  fs::path forward = write_scratch("forward.gdol",
                                   "library L ontology O = P [a] end pattern P [Class: X] = Class: X end");
  CHECK(run_args({"check", forward.string()}).status == 1);
  CHECK(run_args({"list", bad.string()}).status == 1);
}

TEST_CASE("I/O errors exit 3") {
  CHECK(run_args({"check", (scratch() / "absent.gdol").string()}).status == 3);
  Outcome r = run_args({"flatten", fx("driving.gdol"), "-t", "Driving", "-o",
                        (scratch() / "no-such-dir" / "out.omn").string()});
  CHECK(r.status == 3);
}

TEST_CASE("output file") {
  fs::path out = scratch() / "driving.omn";
  fs::remove(out);
  Outcome r = run_args({"flatten", fx("driving.gdol"), "-t", "DrivingPatternInstance_Exp", "--output", out.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(out, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run_args({"flatten", fx("driving.gdol"), "-t", "drivePatternInstance"}).out);
}

TEST_CASE("list") {
  Outcome r = run_args({"list", fx("role.gdol")});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("library RolePatterns\n", 0) == 0);
  CHECK(r.out.find("\npattern RoleGODPParametrisation [Class Role][Class Performer][Class Provider?]\n") !=
        std::string::npos);
  CHECK(r.out.find("\nontology ThematicRoles\n") != std::string::npos);
  fs::path empty = write_scratch("empty.gdol", "library Nothing\n");
  CHECK(run_args({"list", empty.string()}).out == "library Nothing\n");
}

TEST_CASE("obligations report") {
  Outcome r = run_args({"obligations", fx("obligations.gdol"), "-t", "PuppyOntology"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "target: PuppyOntology\n"
        "obligations: 1\n"
        "\n"
        "obligation: 1\n"
        "pattern: Refinement\n"
        "argument: 1\n"
        "location: 16:14\n"
        "ontology: Taxonomy\n"
        "fit: Sub |-> Dog\n"
        "fit: Super |-> Animal\n"
        "axiom: Class: Dog SubClassOf: Animal\n");
  Outcome none = run_args({"obligations", fx("driving.gdol"), "-t", "drivePatternInstance"});
  CHECK(none.status == 0);
  CHECK(none.out == "target: drivePatternInstance\nobligations: 0\n");
  Outcome flat = run_args({"flatten", fx("obligations.gdol"), "-t", "PuppyOntology"});
  CHECK(flat.err.find("1 proof obligation") != std::string::npos);
}

TEST_CASE("JSON diagnostics") {
  Outcome r = run_args({"check", fx("kind_mismatch.gdol"), "--json-diagnostics"});
  CHECK(r.status == 2);
  std::istringstream lines(r.err);
  std::string line;
  REQUIRE(std::getline(lines, line));
  auto j = nlohmann::json::parse(line);
  CHECK(j["severity"] == "error");
  CHECK(j["code"] == "KindMismatch");
  CHECK(j["line"] == 10);
  CHECK(j["column"] == 22);
  CHECK(j["file"] == fx("kind_mismatch.gdol"));
}
