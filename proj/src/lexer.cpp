#include "gt/lexer.hpp"

#include <array>
#include <cctype>

namespace gt::text {

namespace {

constexpr std::array<std::string_view, 9> two_char = {"->", "==", "!=", "<=", ">=", "&&", "||", "<<", ">>"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

std::vector<Token> tokenize(std::string_view src, const std::string& file) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;

  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      SourcePos start{line, col};
      advance(2);
      while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/')) advance();
      if (i + 1 >= src.size()) throw ParseError("unterminated comment", start, file);
      advance(2);
      continue;
    }

    Token tok;
    tok.pos = {line, col};
    if (ident_start(c)) {
      const std::size_t b = i;
      while (i < src.size() && ident_char(src[i])) advance();
      tok.kind = TokenKind::Identifier;
      tok.text = std::string(src.substr(b, i - b));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t b = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance();
      tok.kind = TokenKind::Integer;
      tok.text = std::string(src.substr(b, i - b));
    } else if (c == '"') {
      advance();
      tok.kind = TokenKind::String;
      for (;;) {
        if (i >= src.size() || src[i] == '\n') throw ParseError("unterminated string literal", tok.pos, file);
        char ch = src[i];
        if (ch == '"') {
          advance();
          break;
        }
        if (ch == '\\') {
          if (i + 1 >= src.size()) throw ParseError("unterminated string literal", tok.pos, file);
          const char e = src[i + 1];
          switch (e) {
          case 'n': tok.text += '\n'; break;
          case 't': tok.text += '\t'; break;
          case 'r': tok.text += '\r'; break;
          case '"': tok.text += '"'; break;
          case '\\': tok.text += '\\'; break;
          case 'x': {
            if (i + 3 >= src.size() || !std::isxdigit(static_cast<unsigned char>(src[i + 2])) ||
                !std::isxdigit(static_cast<unsigned char>(src[i + 3])))
              throw ParseError("bad \\x escape", {line, col}, file);
            tok.text += static_cast<char>(std::stoi(std::string(src.substr(i + 2, 2)), nullptr, 16));
            advance(2);
            break;
          }
          default: throw ParseError(std::string("unknown escape \\") + e, {line, col}, file);
          }
          advance(2);
          continue;
        }
        tok.text += ch;
        advance();
      }
    } else {
      tok.kind = TokenKind::Punct;
      std::string_view two = src.substr(i, 2);
      bool matched = false;
      for (auto p : two_char) {
        if (two == p) {
          tok.text = std::string(p);
          advance(2);
          matched = true;
          break;
        }
      }
      if (!matched) {
        tok.text = std::string(1, c);
        advance();
      }
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::End;
  end.pos = {line, col};
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
  case TokenKind::Identifier: return "'" + t.text + "'";
  case TokenKind::String: return "string literal";
  case TokenKind::Integer: return "integer " + t.text;
  case TokenKind::Punct: return "'" + t.text + "'";
  case TokenKind::End: return "end of input";
  }
  return "?";
}

void TokenStream::unexpected(std::string_view expected) const {
  fail("expected " + std::string(expected) + ", found " + describe(peek()));
}

const Token& TokenStream::expect_punct(std::string_view p) {
  if (!is_punct(p)) unexpected("'" + std::string(p) + "'");
  return next();
}

void TokenStream::expect_keyword(std::string_view k) {
  if (!is_keyword(k)) unexpected("'" + std::string(k) + "'");
  next();
}

std::string TokenStream::expect_identifier(std::string_view what) {
  if (peek().kind != TokenKind::Identifier) unexpected(what);
  return next().text;
}

std::string TokenStream::expect_string() {
  if (peek().kind != TokenKind::String) unexpected("string literal");
  return next().text;
}

std::int64_t TokenStream::expect_integer() {
  bool negative = false;
  if (is_punct("-") && peek(1).kind == TokenKind::Integer) {
    next();
    negative = true;
  }
  if (peek().kind != TokenKind::Integer) unexpected("integer");
  const Token& t = next();
  std::int64_t v = 0;
  for (char c : t.text) {
    if (v > (INT64_MAX - (c - '0')) / 10) fail_at(t, "integer literal out of range");
    v = v * 10 + (c - '0');
  }
  return negative ? -v : v;
}

} // namespace gt::text
