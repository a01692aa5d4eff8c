#include "godp/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "godp/expand.hpp"
#include "godp/ontology.hpp"
#include "godp/parser.hpp"
#include "godp/report.hpp"
#include "godp/resolve.hpp"

namespace godp {

namespace {

class Reporter {
 public:
  Reporter(const RunConfig& config, std::ostream& err) : config_(config), err_(err) {}

  void emit(const Diagnostic& d) {
    err_ << (config_.json_diagnostics ? format_diagnostic_json(config_.input, d)
                                      : format_diagnostic(config_.input, d))
         << '\n';
  }

  int fail(const Error& error) {
    for (const auto& d : to_diagnostics(error)) emit(d);
    return exit_code_for(error.kind());
  }

 private:
  const RunConfig& config_;
  std::ostream& err_;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "error while reading '" + path + "'");
  return buffer.str();
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.output) {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  fs::path path(*config.output);
  fs::path parent = path.parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw Error(ErrorKind::Io, "output directory '" + parent.string() + "' does not exist");
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  file << text;
  file.close();
  if (!file) throw Error(ErrorKind::Io, "error while writing '" + path.string() + "'");
}

const std::string& require_target(const RunConfig& config) {
  if (!config.target || config.target->empty()) {
    throw Error(ErrorKind::Usage, "this command needs --target NAME");
  }
  return *config.target;
}

ResolvedLibrary load(const RunConfig& config) {
  ResolvedLibrary resolved = resolve(parse_library(read_input(config.input)));
  check_acyclic(resolved);
  return resolved;
}

// Stratifies (unless disabled) and renders; stratification errors are
// located at the ontology definition.
std::string render(const ResolvedLibrary& library, const std::string& target,
                   const FlatOntology& flat, const RunConfig& config) {
  try {
    if (config.keep_structured_names) {
      return emit_manchester(flat, {.allow_structured_names = true});
    }
    return emit_manchester(stratify_ontology(flat));
  } catch (Error& e) {
    if (const Item* item = library.find(target)) e.locate(item->loc());
    throw;
  }
}

}  // namespace

int cmd_flatten(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Reporter reporter(config, err);
  try {
    const std::string& target = require_target(config);
    ResolvedLibrary library = load(config);
    ExpansionResult result = expand(library, target);
    for (const auto& w : result.warnings) reporter.emit(w);
    std::string text = render(library, target, result.ontology, config);
    write_output(config, text, out);
    if (!result.obligations.empty()) {
      const Item* item = library.find(target);
      reporter.emit({Severity::Note, "",
                     std::to_string(result.obligations.size()) +
                         " proof obligation(s) generated; see `godp obligations`",
                     item ? item->loc() : SourceLoc{}});
    }
    return 0;
  } catch (const Error& e) {
    return reporter.fail(e);
  }
}

int cmd_check(const RunConfig& config, std::ostream&, std::ostream& err) {
  Reporter reporter(config, err);
  int status = 0;
  try {
    ResolvedLibrary library = load(config);
    for (const auto& item : library.library.items) {
      if (!item.is_pattern) continue;
      for (const auto& name : library.free_symbols.at(item.name())) {
        reporter.emit({Severity::Warning, "UndeclaredSymbol",
                       "'" + name.str() + "' is used in pattern '" + item.name() +
                           "' but is neither a parameter nor declared",
                       item.loc()});
      }
    }
    for (const auto& item : library.library.items) {
      if (item.is_pattern) continue;
      try {
        ExpansionResult result = expand(library, item.name());
        for (const auto& w : result.warnings) reporter.emit(w);
        render(library, item.name(), result.ontology, config);
      } catch (const Error& e) {
        int code = reporter.fail(e);
        if (status == 0) status = code;
      }
    }
  } catch (const Error& e) {
    return reporter.fail(e);
  }
  return status;
}

int cmd_list(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Reporter reporter(config, err);
  try {
    Library library = parse_library(read_input(config.input));
    std::string text = "library " + library.name + "\n";
    for (const auto& item : library.items) {
      if (item.is_pattern) {
        text += "pattern " + item.name() + " " + param_signature(item.pattern.params) + "\n";
      } else {
        text += "ontology " + item.name() + "\n";
      }
    }
    write_output(config, text, out);
    return 0;
  } catch (const Error& e) {
    return reporter.fail(e);
  }
}

int cmd_obligations(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Reporter reporter(config, err);
  try {
    const std::string& target = require_target(config);
    ResolvedLibrary library = load(config);
    ExpansionResult result = expand(library, target);
    write_output(config,
                 format_obligation_report(target, result.obligations, config.keep_structured_names),
                 out);
    return 0;
  } catch (const Error& e) {
    return reporter.fail(e);
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case RunConfig::Command::Flatten: return cmd_flatten(config, out, err);
    case RunConfig::Command::Check: return cmd_check(config, out, err);
    case RunConfig::Command::List: return cmd_list(config, out, err);
    case RunConfig::Command::Obligations: return cmd_obligations(config, out, err);
  }
  return 2;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flattens generic ontology design patterns into OWL Manchester syntax", "godp"};
  RunConfig config;
  std::string command;
  app.add_option("command", command, "flatten | check | list | obligations")
      ->required()
      ->check(CLI::IsMember({"flatten", "check", "list", "obligations"}));
  app.add_option("input", config.input, "pattern library (.gdol)")->required();
  app.add_option("--target,-t", config.target, "ontology to flatten");
  app.add_option("--output,-o", config.output, "output file (default: standard output)");
  app.add_flag("--keep-structured-names", config.keep_structured_names,
               "skip stratification and print bracketed names");
  app.add_flag("--json-diagnostics", config.json_diagnostics, "diagnostics as JSON lines");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "godp: error: " << e.what() << '\n' << app.help();
    return 2;
  }
  if (command == "flatten") config.command = RunConfig::Command::Flatten;
  else if (command == "check") config.command = RunConfig::Command::Check;
  else if (command == "list") config.command = RunConfig::Command::List;
  else config.command = RunConfig::Command::Obligations;
  return run(config, out, err);
}

}  // namespace godp
