#include "godp/diagnostics.hpp"

#include <json.hpp>
#include <utility>

namespace godp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::ForwardReference: return "ForwardReference";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::CyclicReference: return "CyclicReference";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::MissingMandatoryArgument: return "MissingMandatoryArgument";
    case ErrorKind::OntologyArgForSymbolParam: return "OntologyArgForSymbolParam";
    case ErrorKind::SymbolArgForOntologyParam: return "SymbolArgForOntologyParam";
    case ErrorKind::OptionalParamInRequirement: return "OptionalParamInRequirement";
    case ErrorKind::ConflictingKind: return "ConflictingKind";
    case ErrorKind::UnmappedParameterSymbol: return "UnmappedParameterSymbol";
    case ErrorKind::FitTargetUndeclared: return "FitTargetUndeclared";
    case ErrorKind::StratificationCollision: return "StratificationCollision";
    case ErrorKind::UnstratifiedName: return "UnstratifiedName";
    case ErrorKind::UnknownTarget: return "UnknownTarget";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Io: return "Io";
  }
  return "Error";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnsupportedConstruct:
    case ErrorKind::DuplicateName:
    case ErrorKind::UnresolvedReference:
    case ErrorKind::ForwardReference:
      return 1;
    case ErrorKind::Io:
      return 3;
    default:
      return 2;
  }
}

Error::Error(ErrorKind kind, std::string message, SourceLoc loc)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      message_(std::move(message)),
      loc_(loc) {}

void Error::add_note(SourceLoc loc, std::string message) {
  notes_.push_back({loc, std::move(message)});
}

void Error::locate(SourceLoc loc) {
  if (!loc_.known()) loc_ = loc;
}

namespace {

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
  }
  return "error";
}

}  // namespace

std::string format_diagnostic(std::string_view file, const Diagnostic& d) {
  std::string out(file);
  if (d.loc.known()) {
    out += ':' + std::to_string(d.loc.line) + ':' + std::to_string(d.loc.column);
  }
  out += ": ";
  out += severity_name(d.severity);
  out += ": ";
  if (!d.code.empty()) out += d.code + ": ";
  out += d.message;
  return out;
}

std::string format_diagnostic_json(std::string_view file, const Diagnostic& d) {
  nlohmann::json j;
  j["file"] = file;
  j["line"] = d.loc.line;
  j["column"] = d.loc.column;
  j["severity"] = severity_name(d.severity);
  j["code"] = d.code;
  j["message"] = d.message;
  return j.dump();
}

std::vector<Diagnostic> to_diagnostics(const Error& error) {
  std::vector<Diagnostic> out;
  out.push_back({Severity::Error, std::string(to_string(error.kind())), error.message(), error.loc()});
  for (const auto& note : error.notes()) {
    out.push_back({Severity::Note, "", note.message, note.loc});
  }
  return out;
}

}  // namespace godp
