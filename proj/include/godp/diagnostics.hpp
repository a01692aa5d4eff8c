#ifndef GODP_DIAGNOSTICS_HPP
#define GODP_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace godp {

// 1-based line and column. Line 0 means "no location".
//
// Locations never take part in structural equality: two trees that differ
// only in where they were parsed from compare equal.
struct SourceLoc {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  friend bool operator==(SourceLoc, SourceLoc) { return true; }
};

enum class ErrorKind {
  SyntaxError,
  UnsupportedConstruct,
  DuplicateName,
  UnresolvedReference,
  ForwardReference,
  ArityMismatch,
  CyclicReference,
  KindMismatch,
  MissingMandatoryArgument,
  OntologyArgForSymbolParam,
  SymbolArgForOntologyParam,
  OptionalParamInRequirement,
  ConflictingKind,
  UnmappedParameterSymbol,
  FitTargetUndeclared,
  StratificationCollision,
  UnstratifiedName,
  UnknownTarget,
  Usage,
  Io,
};

std::string_view to_string(ErrorKind kind);

// CLI exit code for an error: 1 syntax/resolution, 2 semantic, 3 I/O.
int exit_code_for(ErrorKind kind);

struct Note {
  SourceLoc loc;
  std::string message;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourceLoc loc = {});

  ErrorKind kind() const { return kind_; }
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return message_; }
  const std::vector<Note>& notes() const { return notes_; }

  // Instantiation call stack, innermost first.
  void add_note(SourceLoc loc, std::string message);
  // Sets the location if none is known yet.
  void locate(SourceLoc loc);

 private:
  ErrorKind kind_;
  std::string message_;
  SourceLoc loc_;
  std::vector<Note> notes_;
};

enum class Severity { Error, Warning, Note };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceLoc loc;
};

// `file:line:col: severity: message`; the location part is dropped when unknown.
std::string format_diagnostic(std::string_view file, const Diagnostic& d);
// One JSON object per diagnostic.
std::string format_diagnostic_json(std::string_view file, const Diagnostic& d);

// The error itself followed by its notes.
std::vector<Diagnostic> to_diagnostics(const Error& error);

}  // namespace godp

#endif  // GODP_DIAGNOSTICS_HPP
