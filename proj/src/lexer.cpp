#include "godp/lexer.hpp"

#include <cctype>

namespace godp {

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "section keyword";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Equals: return "'='";
    case TokenKind::Question: return "'?'";
    case TokenKind::MapsTo: return "'|->'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    bool adjacent = false;
    while (true) {
      if (skip_trivia()) adjacent = false;
      Token tok;
      tok.loc = {line_, column_};
      tok.adjacent = adjacent && !tokens.empty();
      if (pos_ >= text_.size()) {
        tokens.push_back(tok);
        return tokens;
      }
      lex_one(tok);
      tokens.push_back(std::move(tok));
      adjacent = true;
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
  }

  // Returns true if anything was skipped.
  bool skip_trivia() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '%' && peek(1) == '%') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
    return pos_ != start;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::SyntaxError, message, {line_, column_});
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void lex_one(Token& tok) {
    char c = peek();
    auto single = [&](TokenKind kind) {
      tok.kind = kind;
      tok.text = std::string(1, c);
      advance();
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (ident_char(peek())) advance();
      tok.text = std::string(text_.substr(start, pos_ - start));
      tok.kind = TokenKind::Identifier;
      if (peek() == ':') {
        if (tok.text == "owl" && text_.substr(pos_ + 1, 5) == "Thing" &&
            !ident_char(peek(6))) {
          for (int i = 0; i < 6; ++i) advance();
          tok.text = "owl:Thing";
        } else {
          advance();
          tok.kind = TokenKind::Keyword;
        }
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if (std::isalpha(static_cast<unsigned char>(peek()))) fail("malformed number");
      tok.kind = TokenKind::Number;
      tok.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    switch (c) {
      case '[': return single(TokenKind::LBracket);
      case ']': return single(TokenKind::RBracket);
      case '{': return single(TokenKind::LBrace);
      case '}': return single(TokenKind::RBrace);
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      case ',': return single(TokenKind::Comma);
      case '=': return single(TokenKind::Equals);
      case '?': return single(TokenKind::Question);
      case '|':
        if (peek(1) == '-' && peek(2) == '>') {
          tok.kind = TokenKind::MapsTo;
          tok.text = "|->";
          advance(), advance(), advance();
          return;
        }
        break;
      case '"': {
        advance();
        std::string value;
        while (pos_ < text_.size() && peek() != '"') {
          if (peek() == '\\' && pos_ + 1 < text_.size()) advance();
          value += peek();
          advance();
        }
        if (pos_ >= text_.size()) fail("unterminated string literal");
        advance();
        tok.kind = TokenKind::String;
        tok.text = std::move(value);
        return;
      }
      default:
        break;
    }
    if (static_cast<unsigned char>(c) >= 0x80) fail("non-ASCII character outside a comment");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace godp
