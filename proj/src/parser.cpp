#include "godp/parser.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "godp/lexer.hpp"

namespace godp {

namespace {

constexpr std::array kReserved = {
    // structuring
    "pattern", "ontology", "then", "and", "end", "fit", "library",
    // Manchester class-expression keywords
    "some", "only", "max", "min", "exactly", "not", "or", "value", "inverse", "that",
};

constexpr std::array kUnsupportedFrames = {
    "Datatype",        "AnnotationProperty", "Prefix",         "Ontology",
    "Import",          "DisjointClasses",    "EquivalentClasses", "DisjointProperties",
    "EquivalentProperties", "SameIndividual", "DifferentIndividuals", "Rule",
};

bool contains(const auto& list, std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

std::optional<SectionKind> section_kind(std::string_view keyword) {
  using S = SectionKind;
  static const std::array<std::pair<std::string_view, S>, 10> table = {{
      {"Characteristics", S::Characteristics},
      {"Domain", S::Domain},
      {"Range", S::Range},
      {"InverseOf", S::InverseOf},
      {"SubPropertyOf", S::SubPropertyOf},
      {"SubClassOf", S::SubClassOf},
      {"EquivalentTo", S::EquivalentTo},
      {"DisjointWith", S::DisjointWith},
      {"Types", S::Types},
      {"Facts", S::Facts},
  }};
  for (const auto& [name, kind] : table) {
    if (name == keyword) return kind;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Library library() {
    Library lib;
    expect_word("library");
    lib.name = identifier("library name");
    std::set<std::string> names;
    while (!at(TokenKind::End)) {
      Item item;
      if (at_word("ontology")) {
        item.ontology = ontology_def();
      } else if (at_word("pattern")) {
        item.is_pattern = true;
        item.pattern = pattern_def();
      } else {
        fail({"'ontology'", "'pattern'", "end of input"});
      }
      if (!names.insert(item.name()).second) {
        throw Error(ErrorKind::DuplicateName, "'" + item.name() + "' is already defined",
                    item.loc());
      }
      lib.items.push_back(std::move(item));
    }
    return lib;
  }

  std::vector<Frame> frames_only() {
    auto frames = frames_block();
    expect(TokenKind::End);
    return frames;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Identifier && peek(ahead).text == word;
  }
  const Token& next() {
    const Token& tok = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& tok = peek();
    std::string got = tok.kind == TokenKind::End ? "end of input" : "'" + tok.text + "'";
    if (tok.kind == TokenKind::Keyword) got = "'" + tok.text + ":'";
    std::string message = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
      message += expected[i];
    }
    throw Error(ErrorKind::SyntaxError, message + ", found " + got, tok.loc);
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail({std::string(describe(kind))});
    return next();
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) fail({"'" + std::string(word) + "'"});
    next();
  }

  std::string identifier(const std::string& what) {
    if (!at(TokenKind::Identifier)) fail({what});
    if (is_reserved_word(peek().text)) {
      throw Error(ErrorKind::SyntaxError,
                  "reserved word '" + peek().text + "' cannot be used as " + what, peek().loc);
    }
    return next().text;
  }

  bool at_frame_keyword() const {
    return at(TokenKind::Keyword) &&
           (parse_entity_kind(peek().text) || contains(kUnsupportedFrames, peek().text));
  }

  // name ::= ident ( '[' name (',' name)* ']' )*   -- brackets glued to the name
  StructuredName structured_name(const std::string& what = "name") {
    if (at_word("inverse")) {
      throw Error(ErrorKind::UnsupportedConstruct, "inverse property expressions", peek().loc);
    }
    std::string base = identifier(what);
    std::vector<StructuredName::Group> groups;
    while (at(TokenKind::LBracket) && peek().adjacent) {
      next();
      StructuredName::Group group;
      group.push_back(structured_name("constituent name"));
      while (at(TokenKind::Comma)) {
        next();
        group.push_back(structured_name("constituent name"));
      }
      expect(TokenKind::RBracket);
      groups.push_back(std::move(group));
    }
    return StructuredName(std::move(base), std::move(groups));
  }

  StructuredName plain_name(const std::string& what) {
    SourceLoc loc = peek().loc;
    StructuredName name = structured_name(what);
    if (!name.is_plain()) {
      throw Error(ErrorKind::SyntaxError, what + " must be a plain identifier", loc);
    }
    return name;
  }

  // ---- items -------------------------------------------------------------

  OntologyDef ontology_def() {
    OntologyDef def;
    def.loc = peek().loc;
    expect_word("ontology");
    def.name = identifier("ontology name");
    expect(TokenKind::Equals);
    def.body = expr();
    expect_word("end");
    return def;
  }

  PatternDef pattern_def() {
    PatternDef def;
    def.loc = peek().loc;
    expect_word("pattern");
    def.name = identifier("pattern name");
    if (!at(TokenKind::LBracket)) fail({"'[' starting a parameter"});
    std::map<StructuredName, std::size_t> names;  // symbol -> parameter position
    while (at(TokenKind::LBracket)) {
      Param param = parameter();
      auto check = [&](const StructuredName& n) {
        if (n.str() == def.name) {
          throw Error(ErrorKind::DuplicateName,
                      "parameter '" + n.str() + "' has the name of its pattern", param.loc);
        }
        auto [it, inserted] = names.emplace(n, def.params.size());
        if (inserted) return;
        const Param& other = def.params[it->second];
        bool optional_single = (!param.is_ontology && param.optional) ||
                               (!other.is_ontology && other.optional);
        if ((param.is_ontology || other.is_ontology) && optional_single) {
          throw Error(ErrorKind::OptionalParamInRequirement,
                      "optional parameter '" + n.str() +
                          "' may not occur in a parameter ontology of pattern '" + def.name + "'",
                      param.loc);
        }
        throw Error(ErrorKind::DuplicateName,
                    "parameter '" + n.str() + "' is declared twice in pattern '" + def.name + "'",
                    param.loc);
      };
      if (param.is_ontology) {
        for (const auto& [n, k] : param.signature) check(n);
      } else {
        check(param.name);
      }
      def.params.push_back(std::move(param));
    }
    expect(TokenKind::Equals);
    def.body = expr();
    expect_word("end");
    return def;
  }

  Param parameter() {
    Param param;
    param.loc = peek().loc;
    expect(TokenKind::LBracket);
    if (at_word("ontology")) {
      next();
      param.is_ontology = true;
      expect(TokenKind::LBrace);
      param.frames = frames_block();
      expect(TokenKind::RBrace);
      auto axioms = desugar_frames(param.frames);
      FlatOntology flat;
      try {
        flat = make_flat(axioms);
      } catch (Error& e) {
        throw Error(e.kind(), e.message(), param.loc);
      }
      param.signature = flat.signature;
      for (const auto& ax : flat.axioms) {
        if (!std::holds_alternative<Declaration>(ax)) param.requirement.push_back(ax);
      }
    } else {
      if (!at(TokenKind::Keyword) || !parse_entity_kind(peek().text)) {
        fail({"'Class:'", "'ObjectProperty:'", "'DataProperty:'", "'Individual:'",
              "'ontology'"});
      }
      param.kind = *parse_entity_kind(next().text);
      param.name = plain_name("parameter name");
    }
    if (at(TokenKind::Question)) {
      next();
      param.optional = true;
    }
    expect(TokenKind::RBracket);
    return param;
  }

  // ---- structured expressions -------------------------------------------

  // expr ::= and_expr ('then' expr)?
  OntologyExpr expr() {
    SourceLoc loc = peek().loc;
    OntologyExpr left = and_expr();
    if (at_word("then")) {
      next();
      return OntologyExpr::binary(OntologyExpr::Kind::Then, std::move(left), expr(), loc);
    }
    return left;
  }

  // and_expr ::= primary ('and' primary)*
  OntologyExpr and_expr() {
    SourceLoc loc = peek().loc;
    OntologyExpr left = primary();
    while (at_word("and")) {
      next();
      left = OntologyExpr::binary(OntologyExpr::Kind::And, std::move(left), primary(), loc);
    }
    return left;
  }

  OntologyExpr primary() {
    SourceLoc loc = peek().loc;
    if (at(TokenKind::LBrace)) {
      next();
      OntologyExpr inner = expr();
      expect(TokenKind::RBrace);
      return inner;
    }
    if (at_frame_keyword()) return OntologyExpr::basic(frames_block(), loc);
    if (at(TokenKind::Identifier) && !is_reserved_word(peek().text)) {
      std::string target = next().text;
      if (!at(TokenKind::LBracket)) return OntologyExpr::ref(std::move(target), loc);
      std::vector<Arg> args;
      while (at(TokenKind::LBracket)) args.push_back(argument());
      return OntologyExpr::instantiate(std::move(target), std::move(args), loc);
    }
    fail({"'Class:'", "'ObjectProperty:'", "ontology or pattern name", "'{'"});
  }

  Arg argument() {
    Arg arg;
    arg.loc = peek().loc;
    expect(TokenKind::LBracket);
    if (at(TokenKind::RBracket)) {
      next();
      arg.kind = Arg::Kind::Omitted;
      return arg;
    }
    arg.kind = Arg::Kind::Symbol;
    if (at(TokenKind::Keyword)) {
      auto kind = parse_entity_kind(peek().text);
      if (!kind) fail({"'Class:'", "'ObjectProperty:'", "'DataProperty:'", "'Individual:'", "name"});
      next();
      arg.annotation = kind;
      arg.name = structured_name("argument name");
    } else {
      arg.name = structured_name("argument name");
      if (at_word("fit")) {
        next();
        arg.kind = Arg::Kind::Ontology;
        if (!arg.name.is_plain()) {
          throw Error(ErrorKind::SyntaxError, "ontology argument must be a plain name", arg.loc);
        }
        do {
          if (at(TokenKind::Comma)) next();
          FitPair pair;
          pair.from = plain_name("parameter symbol");
          expect(TokenKind::MapsTo);
          pair.to = structured_name("argument symbol");
          arg.fit.push_back(std::move(pair));
        } while (at(TokenKind::Comma));
      }
    }
    expect(TokenKind::RBracket);
    return arg;
  }

  // ---- Manchester frames -------------------------------------------------

  std::vector<Frame> frames_block() {
    std::vector<Frame> frames;
    if (!at_frame_keyword()) fail({"'Class:'", "'ObjectProperty:'", "'DataProperty:'", "'Individual:'"});
    while (at_frame_keyword()) frames.push_back(frame());
    return frames;
  }

  Frame frame() {
    Frame frame;
    frame.loc = peek().loc;
    const Token& kw = next();
    auto kind = parse_entity_kind(kw.text);
    if (!kind) {
      throw Error(ErrorKind::UnsupportedConstruct, "frame '" + kw.text + ":'", kw.loc);
    }
    frame.kind = *kind;
    if (at_word("owl:Thing")) {
      next();
      frame.subject = StructuredName(std::string(kThing));
    } else {
      frame.subject = structured_name("entity name");
    }
    while (at(TokenKind::Keyword) && !at_frame_keyword()) frame.sections.push_back(section());
    return frame;
  }

  Section section() {
    Section section;
    section.loc = peek().loc;
    section.keyword = next().text;
    auto kind = section_kind(section.keyword);
    if (!kind) {
      // Skip the body so the rest of the file still parses; desugaring rejects it.
      section.kind = SectionKind::Unsupported;
      while (!at(TokenKind::End) && !at(TokenKind::Keyword) && !at(TokenKind::RBrace) &&
             !at(TokenKind::RBracket) && !at_word("then") && !at_word("and") && !at_word("end")) {
        next();
      }
      return section;
    }
    section.kind = *kind;
    do {
      if (at(TokenKind::Comma)) next();
      section.items.push_back(section_item(*kind));
    } while (at(TokenKind::Comma));
    return section;
  }

  SectionItem section_item(SectionKind kind) {
    SectionItem item;
    item.loc = peek().loc;
    switch (kind) {
      case SectionKind::InverseOf:
      case SectionKind::SubPropertyOf:
        item.value = structured_name("property name");
        break;
      case SectionKind::Characteristics:
        item.value = Characteristic{identifier("characteristic")};
        break;
      case SectionKind::Facts: {
        if (at_word("not")) {
          throw Error(ErrorKind::UnsupportedConstruct, "negative property assertions", peek().loc);
        }
        Fact fact;
        fact.property = structured_name("property name");
        fact.object = structured_name("individual name");
        item.value = std::move(fact);
        break;
      }
      default:
        item.value = class_expr();
        break;
    }
    return item;
  }

  // ---- class expressions -------------------------------------------------

  ClassExpr class_expr() {
    std::vector<ClassExpr> operands;
    operands.push_back(conjunction());
    while (at_word("or")) {
      next();
      operands.push_back(conjunction());
    }
    if (operands.size() == 1) return std::move(operands.front());
    return ClassExpr::nary(ClassExpr::Op::Or, std::move(operands));
  }

  // `and` after a class expression is structuring when it is followed by a
  // frame keyword, a '{', or a name with a detached argument bracket.
  bool and_is_conjunction() const {
    const Token& after = peek(1);
    if (after.kind == TokenKind::Keyword || after.kind == TokenKind::LBrace) return false;
    if (after.kind == TokenKind::Identifier && peek(2).kind == TokenKind::LBracket &&
        !peek(2).adjacent) {
      return false;
    }
    return true;
  }

  ClassExpr conjunction() {
    std::vector<ClassExpr> operands;
    operands.push_back(unary());
    while (at_word("and") && and_is_conjunction()) {
      next();
      operands.push_back(unary());
    }
    if (operands.size() == 1) return std::move(operands.front());
    return ClassExpr::nary(ClassExpr::Op::And, std::move(operands));
  }

  bool at_class_start() const {
    if (at(TokenKind::LParen)) return true;
    if (!at(TokenKind::Identifier)) return false;
    return peek().text == "not" || !is_reserved_word(peek().text);
  }

  ClassExpr unary() {
    if (at_word("not")) {
      next();
      return ClassExpr::negation(unary());
    }
    if (at(TokenKind::LParen)) {
      next();
      ClassExpr inner = class_expr();
      expect(TokenKind::RParen);
      return inner;
    }
    if (at_word("owl:Thing")) {
      next();
      return ClassExpr::thing();
    }
    if (at_word("value") || at_word("that")) {
      throw Error(ErrorKind::UnsupportedConstruct, "'" + peek().text + "' expressions", peek().loc);
    }
    if (!at_class_start()) fail({"class expression"});
    StructuredName name = structured_name("class or property name");
    using Op = ClassExpr::Op;
    if (at_word("some") || at_word("only")) {
      Op op = next().text == "some" ? Op::Some : Op::Only;
      return ClassExpr::restriction(op, std::move(name), unary());
    }
    if (at_word("max") || at_word("min") || at_word("exactly")) {
      const std::string& word = next().text;
      Op op = word == "max" ? Op::Max : word == "min" ? Op::Min : Op::Exactly;
      const Token& number = expect(TokenKind::Number);
      unsigned long n = 0;
      try {
        n = std::stoul(number.text);
      } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, "cardinality out of range", number.loc);
      }
      ClassExpr filler = at_class_start() || at_word("owl:Thing") ? unary() : ClassExpr::thing();
      return ClassExpr::restriction(op, std::move(name), std::move(filler),
                                    static_cast<unsigned>(n));
    }
    if (at_word("value") || at_word("Self")) {
      throw Error(ErrorKind::UnsupportedConstruct, "'" + peek().text + "' restrictions", peek().loc);
    }
    return ClassExpr::named(std::move(name));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- printing ---------------------------------------------------------------

std::string indent_lines(const std::string& text, const std::string& indent) {
  std::string out;
  bool line_start = true;
  for (char c : text) {
    if (line_start && c != '\n') out += indent;
    out += c;
    line_start = c == '\n';
  }
  return out;
}

std::string print_arg(const Arg& arg) {
  switch (arg.kind) {
    case Arg::Kind::Omitted:
      return "[]";
    case Arg::Kind::Symbol:
      if (arg.annotation) return "[" + std::string(to_string(*arg.annotation)) + ": " + arg.name.str() + "]";
      return "[" + arg.name.str() + "]";
    case Arg::Kind::Ontology: {
      std::string out = "[" + arg.name.str();
      for (std::size_t i = 0; i < arg.fit.size(); ++i) {
        out += i == 0 ? " fit " : ", ";
        out += arg.fit[i].from.str() + " |-> " + arg.fit[i].to.str();
      }
      return out + "]";
    }
  }
  return "[]";
}

std::string print_expr(const OntologyExpr& e);

std::string braced(const OntologyExpr& e) {
  return "{\n" + indent_lines(print_expr(e), "  ") + "}\n";
}

// Every printed expression ends with a newline.
std::string print_expr(const OntologyExpr& e) {
  using K = OntologyExpr::Kind;
  switch (e.kind) {
    case K::Basic:
      return print_frames(e.frames);
    case K::Ref:
      return e.target + "\n";
    case K::Instantiate: {
      std::string out = e.target + " ";
      for (const auto& arg : e.args) out += print_arg(arg);
      return out + "\n";
    }
    case K::Then: {
      const auto& left = e.operands.at(0);
      std::string out = left.kind == K::Then ? braced(left) : print_expr(left);
      return out + "then\n" + print_expr(e.operands.at(1));
    }
    case K::And: {
      const auto& left = e.operands.at(0);
      const auto& right = e.operands.at(1);
      bool wrap_left = left.kind == K::Basic || left.kind == K::Then;
      bool wrap_right = right.kind != K::Ref && right.kind != K::Instantiate;
      std::string out = wrap_left ? braced(left) : print_expr(left);
      return out + "and " + (wrap_right ? braced(right) : print_expr(right));
    }
  }
  return "";
}

std::string print_param(const Param& p) {
  std::string out = "[";
  if (p.is_ontology) {
    out += "ontology {\n" + indent_lines(print_frames(p.frames), "    ") + "  }";
  } else {
    out += std::string(to_string(p.kind)) + ": " + p.name.str();
  }
  if (p.optional) out += " ?";
  return out + "]";
}

}  // namespace

bool is_reserved_word(std::string_view word) { return contains(kReserved, word); }

Library parse_library(std::string_view text) { return Parser(tokenize(text)).library(); }

std::vector<Frame> parse_frames(std::string_view text) {
  return Parser(tokenize(text)).frames_only();
}

std::string print_library(const Library& lib) {
  std::string out = "library " + lib.name + "\n";
  for (const auto& item : lib.items) {
    out += "\n";
    if (item.is_pattern) {
      out += "pattern " + item.pattern.name;
      for (const auto& p : item.pattern.params) out += " " + print_param(p);
      out += " =\n";
    } else {
      out += "ontology " + item.ontology.name + " =\n";
    }
    out += indent_lines(print_expr(item.body()), "  ");
    out += "end\n";
  }
  return out;
}

}  // namespace godp
