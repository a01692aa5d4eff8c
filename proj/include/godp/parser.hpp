#ifndef GODP_PARSER_HPP
#define GODP_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "godp/ast.hpp"

namespace godp {

// Parses a `.gdol` library. Throws Error with SyntaxError, DuplicateName or
// UnsupportedConstruct, always located inside `text`.
Library parse_library(std::string_view text);

// Parses bare Manchester frames (no library wrapper).
std::vector<Frame> parse_frames(std::string_view text);

// Pretty-prints a library; parse_library(print_library(lib)) == lib.
std::string print_library(const Library& lib);

bool is_reserved_word(std::string_view word);

}  // namespace godp

#endif  // GODP_PARSER_HPP
