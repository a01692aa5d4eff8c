#ifndef GODP_CLI_HPP
#define GODP_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace godp {

struct RunConfig {
  enum class Command { Flatten, Check, List, Obligations };

  Command command = Command::Check;
  std::string input;
  std::optional<std::string> target;
  std::optional<std::string> output;  // standard output when absent
  bool keep_structured_names = false;
  bool json_diagnostics = false;
};

// Exit codes: 0 success, 1 syntax/resolution error, 2 semantic or usage
// error, 3 I/O error. Diagnostics go to `err` only.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_flatten(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_list(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_obligations(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses `godp <command> <input.gdol> [options]` and runs it.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace godp

#endif  // GODP_CLI_HPP
