#ifndef GODP_LEXER_HPP
#define GODP_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "godp/diagnostics.hpp"

namespace godp {

enum class TokenKind {
  Identifier,  // letters/digits/underscores, or the builtin owl:Thing
  Keyword,     // `Ident:` as in `Class:` or `SubClassOf:`; text excludes the colon
  Number,
  String,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Equals,
  Question,
  MapsTo,  // |->
  End,
};

std::string_view describe(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLoc loc;
  // No whitespace or comment between this token and the previous one.
  bool adjacent = false;
};

// `%%` starts a comment that runs to the end of the line.
// Throws Error(SyntaxError) on characters outside the token set.
std::vector<Token> tokenize(std::string_view text);

}  // namespace godp

#endif  // GODP_LEXER_HPP
