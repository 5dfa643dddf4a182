#pragma once

#include "gt/errors.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gt::text {

enum class TokenKind { Identifier, String, Integer, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text; // identifier name, unescaped string contents, digits, or punctuation
  SourcePos pos;
};

/// Tokenizer shared by every text format in the project.
///
/// Recognizes identifiers ([A-Za-z_][A-Za-z0-9_]*), double-quoted strings with
/// C-style escapes, unsigned decimal integers, `//` and `/* */` comments, and
/// the punctuation `-> == != <= >= && || << >>` plus single characters.
std::vector<Token> tokenize(std::string_view source, const std::string& file = {});

/// Cursor over a token vector with the usual expect/accept helpers.
class TokenStream {
public:
  TokenStream(std::vector<Token> tokens, std::string file = {})
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Punct && peek(ahead).text == p;
  }
  bool is_keyword(std::string_view k, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Identifier && peek(ahead).text == k;
  }
  bool accept_punct(std::string_view p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  bool accept_keyword(std::string_view k) {
    if (!is_keyword(k)) return false;
    next();
    return true;
  }

  const Token& expect_punct(std::string_view p);
  void expect_keyword(std::string_view k);
  std::string expect_identifier(std::string_view what = "identifier");
  std::string expect_string();
  std::int64_t expect_integer(); // accepts a leading '-'

  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(msg, t.pos, file_); }
  [[noreturn]] void unexpected(std::string_view expected) const;

  const std::string& file() const noexcept { return file_; }
  std::size_t position() const noexcept { return pos_; }
  void seek(std::size_t p) { pos_ = p; }

private:
  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t);

} // namespace gt::text
