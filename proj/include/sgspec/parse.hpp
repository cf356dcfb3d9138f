#pragma once

// Textual front-end. The concrete grammar:
//
//   document      := component+
//   component     := "component" IDENT "{" states_clause init_clause
//                    label_clause? op_decl* "}"
//   states_clause := "states" ":" IDENT ("," IDENT)* ";"
//   init_clause   := "init" ":" IDENT ";"
//   label_clause  := "label" ":" STRING ";"
//   op_decl       := "op" IDENT ("[" STRING "]")? "{"
//                    "pre" ":" IDENT ("," IDENT)* ";"
//                    "post" ":" IDENT ";" "}"
//
// "#" starts a comment running to end of line. Whitespace is insignificant;
// LF and CRLF are both accepted. Keywords are contextual, so a state may be
// named "init" or "post". Clauses are accepted in any order; duplicates and
// omissions are reported per clause. The parser never throws: it collects
// every error it can find in one pass and returns either a document or the
// error list, never both.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgspec/model.hpp"

namespace sgspec {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
  int length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind {
  UnexpectedToken,
  UnknownKeyword,
  DuplicateSection,
  MissingSection,
  BadIdentifier,
};

inline std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::UnknownKeyword: return "UnknownKeyword";
    case ParseErrorKind::DuplicateSection: return "DuplicateSection";
    case ParseErrorKind::MissingSection: return "MissingSection";
    case ParseErrorKind::BadIdentifier: return "BadIdentifier";
  }
  return "?";
}

struct ParseError {
  SourceSpan span;
  ParseErrorKind kind;
  std::string message;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct ParseResult {
  std::optional<SpecDocument> document;
  std::vector<ParseError> errors;

  bool ok() const { return document.has_value(); }
};

namespace detail {

struct Token {
  enum class Kind {
    Ident,
    String,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Colon,
    Semicolon,
    Comma,
    End,
    Bad,
  };

  Kind kind = Kind::End;
  std::string text;  // identifier spelling or decoded string value
  SourceSpan span;
  ParseErrorKind bad_kind = ParseErrorKind::UnexpectedToken;
  std::string bad_message;

  bool is_ident(std::string_view s) const { return kind == Kind::Ident && text == s; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.span = {line_, col_, 1};
    if (eof()) return tok;  // Kind::End

    char c = peek();
    if (is_alpha(c)) return lex_ident(tok);
    if (is_digit(c) || c == '_') return lex_bad_ident(tok);
    if (c == '"') return lex_string(tok);

    switch (c) {
      case '{': return punct(tok, Token::Kind::LBrace);
      case '}': return punct(tok, Token::Kind::RBrace);
      case '[': return punct(tok, Token::Kind::LBracket);
      case ']': return punct(tok, Token::Kind::RBracket);
      case ':': return punct(tok, Token::Kind::Colon);
      case ';': return punct(tok, Token::Kind::Semicolon);
      case ',': return punct(tok, Token::Kind::Comma);
      default: {
        advance();
        tok.kind = Token::Kind::Bad;
        tok.bad_kind = ParseErrorKind::UnexpectedToken;
        unsigned char byte = static_cast<unsigned char>(c);
        if (byte >= 0x20 && byte < 0x7f) {
          tok.bad_message = std::string("unexpected character '") + c + "'";
        } else {
          static const char* hex = "0123456789abcdef";
          tok.bad_message = std::string("unexpected byte 0x") + hex[byte >> 4] + hex[byte & 0xf];
        }
        return tok;
      }
    }
  }

 private:
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token punct(Token tok, Token::Kind kind) {
    advance();
    tok.kind = kind;
    return tok;
  }

  Token lex_ident(Token tok) {
    std::size_t start = pos_;
    while (!eof() && is_ident_char(peek())) advance();
    tok.kind = Token::Kind::Ident;
    tok.text = std::string(src_.substr(start, pos_ - start));
    tok.span.length = static_cast<int>(pos_ - start);
    return tok;
  }

  Token lex_bad_ident(Token tok) {
    std::size_t start = pos_;
    bool leading_underscore = peek() == '_';
    while (!eof() && is_ident_char(peek())) advance();
    std::string spelling(src_.substr(start, pos_ - start));
    tok.kind = Token::Kind::Bad;
    tok.bad_kind = ParseErrorKind::BadIdentifier;
    tok.bad_message = "bad identifier '" + spelling + "': identifiers must start with a letter" +
                      (leading_underscore ? std::string(", not '_'") : std::string(", not a digit"));
    tok.span.length = static_cast<int>(pos_ - start);
    return tok;
  }

  Token lex_string(Token tok) {
    std::size_t start = pos_;
    advance();  // opening quote
    std::string value;
    while (true) {
      if (eof() || peek() == '\n') {
        tok.kind = Token::Kind::Bad;
        tok.bad_kind = ParseErrorKind::UnexpectedToken;
        tok.bad_message = "unterminated string";
        tok.span.length = static_cast<int>(pos_ - start);
        return tok;
      }
      char c = peek();
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (eof() || (peek() != '"' && peek() != '\\')) {
          tok.kind = Token::Kind::Bad;
          tok.bad_kind = ParseErrorKind::UnexpectedToken;
          tok.bad_message = "invalid escape in string; only \\\" and \\\\ are recognized";
          tok.span.length = static_cast<int>(pos_ - start);
          return tok;
        }
        c = peek();
        advance();
      }
      value.push_back(c);
    }
    tok.kind = Token::Kind::String;
    tok.text = std::move(value);
    tok.span.length = static_cast<int>(pos_ - start);
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { next(); }

  ParseResult run(std::string_view source_name) {
    std::vector<ComponentSpec> components;
    while (tok_.kind != Token::Kind::End) {
      if (tok_.is_ident("component")) {
        if (auto comp = parse_component()) components.push_back(std::move(*comp));
      } else if (tok_.kind == Token::Kind::Ident) {
        error(ParseErrorKind::UnknownKeyword,
              "expected 'component', found '" + tok_.text + "'");
        sync_to_component();
      } else if (tok_.kind == Token::Kind::Bad) {
        consume_bad();
        sync_to_component();
      } else {
        error(ParseErrorKind::UnexpectedToken, "expected 'component', found " + describe(tok_));
        sync_to_component();
      }
    }
    if (components.empty() && errors_.empty()) {
      error(ParseErrorKind::UnexpectedToken,
            "expected a 'component' declaration, found end of input");
    }

    ParseResult result;
    if (errors_.empty()) {
      SpecDocument doc;
      doc.source_name = std::string(source_name);
      doc.components = std::move(components);
      result.document = std::move(doc);
    } else {
      result.errors = std::move(errors_);
    }
    return result;
  }

 private:
  void next() { tok_ = lexer_.next(); }

  void error(ParseErrorKind kind, std::string message, const SourceSpan* span = nullptr) {
    errors_.push_back({span ? *span : tok_.span, kind, std::move(message)});
  }

  // Bad tokens carry their own diagnosis from the lexer.
  void consume_bad() {
    errors_.push_back({tok_.span, tok_.bad_kind, tok_.bad_message});
    next();
  }

  static std::string describe(const Token& tok) {
    switch (tok.kind) {
      case Token::Kind::Ident: return "'" + tok.text + "'";
      case Token::Kind::String: return "a string";
      case Token::Kind::LBrace: return "'{'";
      case Token::Kind::RBrace: return "'}'";
      case Token::Kind::LBracket: return "'['";
      case Token::Kind::RBracket: return "']'";
      case Token::Kind::Colon: return "':'";
      case Token::Kind::Semicolon: return "';'";
      case Token::Kind::Comma: return "','";
      case Token::Kind::End: return "end of input";
      case Token::Kind::Bad: return "invalid input";
    }
    return "?";
  }

  bool eat(Token::Kind kind) {
    if (tok_.kind != kind) return false;
    next();
    return true;
  }

  // Expects a punctuation token; reports and leaves the token in place on
  // mismatch so the caller can resynchronize.
  bool expect(Token::Kind kind, std::string_view what) {
    if (eat(kind)) return true;
    if (tok_.kind == Token::Kind::Bad) {
      consume_bad();
      return false;
    }
    error(ParseErrorKind::UnexpectedToken,
          "expected " + std::string(what) + ", found " + describe(tok_));
    return false;
  }

  std::optional<std::string> expect_ident(std::string_view what) {
    if (tok_.kind == Token::Kind::Ident) {
      std::string text = std::move(tok_.text);
      next();
      return text;
    }
    if (tok_.kind == Token::Kind::Bad) {
      consume_bad();
      return std::nullopt;
    }
    error(ParseErrorKind::UnexpectedToken,
          "expected " + std::string(what) + ", found " + describe(tok_));
    return std::nullopt;
  }

  std::optional<std::string> expect_string(std::string_view what) {
    if (tok_.kind == Token::Kind::String) {
      std::string text = std::move(tok_.text);
      next();
      return text;
    }
    if (tok_.kind == Token::Kind::Bad) {
      consume_bad();
      return std::nullopt;
    }
    error(ParseErrorKind::UnexpectedToken,
          "expected " + std::string(what) + ", found " + describe(tok_));
    return std::nullopt;
  }

  // Skip to the end of the current clause: past the next ';', or up to a
  // closing '}' / end of input, which the caller handles.
  void sync_clause() {
    while (tok_.kind != Token::Kind::Semicolon && tok_.kind != Token::Kind::RBrace &&
           tok_.kind != Token::Kind::End) {
      next();
    }
    eat(Token::Kind::Semicolon);
  }

  // Skip to the closing '}' of a malformed op body and past it.
  void sync_block() {
    while (tok_.kind != Token::Kind::RBrace && tok_.kind != Token::Kind::End) next();
    eat(Token::Kind::RBrace);
  }

  void sync_to_component() {
    while (tok_.kind != Token::Kind::End && !tok_.is_ident("component")) next();
  }

  // IDENT ("," IDENT)* with duplicate detection. Returns false when the list
  // could not be finished; the caller resynchronizes.
  bool ident_list(std::vector<StateId>& out, std::string_view element, std::string_view list_name) {
    while (true) {
      SourceSpan span = tok_.span;
      auto name = expect_ident(element);
      if (!name) return false;
      bool dup = false;
      for (const auto& s : out) dup = dup || s.name == *name;
      if (dup) {
        error(ParseErrorKind::BadIdentifier,
              "duplicate state '" + *name + "' in " + std::string(list_name), &span);
      } else {
        out.push_back(StateId{std::move(*name)});
      }
      if (!eat(Token::Kind::Comma)) return true;
    }
  }

  std::optional<ComponentSpec> parse_component() {
    next();  // "component"
    auto name = expect_ident("a component name");
    if (!name) {
      sync_to_component();
      return std::nullopt;
    }

    ComponentSpec comp;
    comp.name = std::move(*name);

    if (!expect(Token::Kind::LBrace, "'{' after the component name")) {
      sync_to_component();
      return std::nullopt;
    }

    bool states_seen = false;
    bool init_seen = false;
    bool label_seen = false;

    while (true) {
      if (eat(Token::Kind::RBrace)) break;
      if (tok_.kind == Token::Kind::End) {
        error(ParseErrorKind::UnexpectedToken,
              "expected '}' to close component '" + comp.name + "', found end of input");
        break;
      }
      if (tok_.kind == Token::Kind::Bad) {
        consume_bad();
        continue;
      }
      if (tok_.kind != Token::Kind::Ident) {
        error(ParseErrorKind::UnexpectedToken,
              "expected a clause ('states', 'init', 'label' or 'op') or '}', found " +
                  describe(tok_));
        sync_clause();
        continue;
      }

      if (tok_.text == "states") {
        SourceSpan kw = tok_.span;
        next();
        if (states_seen) {
          error(ParseErrorKind::DuplicateSection,
                "duplicate 'states' section in component '" + comp.name + "'", &kw);
        }
        std::vector<StateId> states;
        if (!expect(Token::Kind::Colon, "':' after 'states'") ||
            !ident_list(states, "a state name", "states list") ||
            !expect(Token::Kind::Semicolon, "';' after the states list")) {
          sync_clause();
        }
        if (!states_seen) {
          comp.states = std::move(states);
          states_seen = true;
        }
      } else if (tok_.text == "init") {
        SourceSpan kw = tok_.span;
        next();
        if (init_seen) {
          error(ParseErrorKind::DuplicateSection,
                "duplicate 'init' section in component '" + comp.name + "'", &kw);
        }
        std::optional<std::string> state;
        if (!expect(Token::Kind::Colon, "':' after 'init'") ||
            !(state = expect_ident("the initial state name")) ||
            !expect(Token::Kind::Semicolon, "';' after the init state")) {
          sync_clause();
        }
        if (!init_seen && state) {
          comp.init = StateId{std::move(*state)};
          init_seen = true;
        }
      } else if (tok_.text == "label") {
        SourceSpan kw = tok_.span;
        next();
        if (label_seen) {
          error(ParseErrorKind::DuplicateSection,
                "duplicate 'label' section in component '" + comp.name + "'", &kw);
        }
        std::optional<std::string> text;
        if (!expect(Token::Kind::Colon, "':' after 'label'") ||
            !(text = expect_string("the label string")) ||
            !expect(Token::Kind::Semicolon, "';' after the label")) {
          sync_clause();
        }
        if (!label_seen && text) {
          comp.label = std::move(*text);
          label_seen = true;
        }
      } else if (tok_.text == "op") {
        if (auto op = parse_op()) comp.ops.push_back(std::move(*op));
      } else {
        error(ParseErrorKind::UnknownKeyword,
              "unknown clause '" + tok_.text + "' in component '" + comp.name +
                  "'; expected 'states', 'init', 'label' or 'op'");
        next();
        sync_clause();
      }
    }

    if (!states_seen) {
      error(ParseErrorKind::MissingSection,
            "component '" + comp.name + "' is missing its 'states' section");
    }
    if (!init_seen) {
      error(ParseErrorKind::MissingSection,
            "component '" + comp.name + "' is missing its 'init' section");
    }
    return comp;
  }

  std::optional<OperationSchema> parse_op() {
    next();  // "op"
    auto name = expect_ident("an op name");
    if (!name) {
      sync_clause();
      return std::nullopt;
    }

    OperationSchema op;
    op.name = std::move(*name);

    if (eat(Token::Kind::LBracket)) {
      auto text = expect_string("the event label string");
      if (!text || !expect(Token::Kind::RBracket, "']' after the event label")) {
        sync_block();
        return std::nullopt;
      }
      op.label = std::move(*text);
    }

    if (!expect(Token::Kind::LBrace, "'{' to open the op body")) {
      sync_block();
      return std::nullopt;
    }

    bool ok = true;
    if (tok_.kind == Token::Kind::Ident && tok_.text != "pre") {
      error(ParseErrorKind::UnknownKeyword,
            "expected 'pre' in op '" + op.name + "', found '" + tok_.text + "'");
      ok = false;
    } else if (!tok_.is_ident("pre")) {
      error(ParseErrorKind::UnexpectedToken,
            "expected 'pre' in op '" + op.name + "', found " + describe(tok_));
      ok = false;
    } else {
      next();
      ok = expect(Token::Kind::Colon, "':' after 'pre'") &&
           ident_list(op.pre, "a state name", "pre list of op '" + op.name + "'") &&
           expect(Token::Kind::Semicolon, "';' after the pre list");
    }

    if (ok) {
      if (tok_.kind == Token::Kind::Ident && tok_.text != "post") {
        error(ParseErrorKind::UnknownKeyword,
              "expected 'post' in op '" + op.name + "', found '" + tok_.text + "'");
        ok = false;
      } else if (!tok_.is_ident("post")) {
        error(ParseErrorKind::UnexpectedToken,
              "expected 'post' in op '" + op.name + "', found " + describe(tok_));
        ok = false;
      } else {
        next();
        std::optional<std::string> post;
        ok = expect(Token::Kind::Colon, "':' after 'post'") &&
             (post = expect_ident("the post state name")).has_value() &&
             expect(Token::Kind::Semicolon, "';' after the post state");
        if (post) op.post = StateId{std::move(*post)};
      }
    }

    if (!ok) {
      sync_block();
      return std::nullopt;
    }
    if (!expect(Token::Kind::RBrace, "'}' to close op '" + op.name + "'")) {
      sync_block();
      return std::nullopt;
    }
    return op;
  }

  Lexer lexer_;
  Token tok_;
  std::vector<ParseError> errors_;
};

}  // namespace detail

// Parses a document. Returns either a structurally complete document or the
// full list of errors found in one pass; never both, and never throws.
inline ParseResult parse(std::string_view source, std::string_view source_name = "<input>") {
  return detail::Parser(source).run(source_name);
}

}  // namespace sgspec
