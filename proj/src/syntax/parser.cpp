#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monotrick/error.hpp"
#include "monotrick/syntax.hpp"

namespace monotrick {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column,
                       std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  ident,
  lparen,
  rparen,
  comma,
  tilde,
  amp,
  bar,
  arrow,
  iff,
  box,
  diamond,
  equals,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident: return "'" + t.text + "'";
    case Tok::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      const std::size_t line = line_;
      const std::size_t col = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      const char c = text_[pos_];
      if (is_ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
        out.push_back({Tok::ident, std::string(text_.substr(start, pos_ - start)), line, col});
        continue;
      }
      auto emit = [&](Tok kind, std::size_t width) {
        out.push_back({kind, std::string(text_.substr(pos_, width)), line, col});
        for (std::size_t i = 0; i < width; ++i) advance();
      };
      if (starts_with("<->")) {
        emit(Tok::iff, 3);
      } else if (starts_with("->")) {
        emit(Tok::arrow, 2);
      } else if (starts_with("[]")) {
        emit(Tok::box, 2);
      } else if (starts_with("<>")) {
        emit(Tok::diamond, 2);
      } else if (c == '(') {
        emit(Tok::lparen, 1);
      } else if (c == ')') {
        emit(Tok::rparen, 1);
      } else if (c == ',') {
        emit(Tok::comma, 1);
      } else if (c == '~') {
        emit(Tok::tilde, 1);
      } else if (c == '&') {
        emit(Tok::amp, 1);
      } else if (c == '|') {
        emit(Tok::bar, 1);
      } else if (c == '=') {
        emit(Tok::equals, 1);
      } else {
        std::size_t width = 1;
        const auto lead = static_cast<unsigned char>(c);
        if (lead >= 0xC0) {
          while (pos_ + width < text_.size() &&
                 (static_cast<unsigned char>(text_[pos_ + width]) & 0xC0) == 0x80) {
            ++width;
          }
        }
        throw ParseError("unexpected character '" + std::string(text_.substr(pos_, width)) + "'",
                         line, col, {});
      }
    }
  }

 private:
  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void advance() {
    const auto c = static_cast<unsigned char>(text_[pos_++]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const std::vector<std::string> kOperandStart = {
    "'('", "'~'", "'[]'", "'<>'", "'forall'", "'exists'", "'true'", "'false'", "identifier"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != Tok::end) {
      fail("unexpected " + describe(peek()),
           {"end of input", "'&'", "'|'", "'->'", "'<->'"});
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column, std::move(expected));
  }

  void expect(Tok kind, const char* shown) {
    if (!accept(kind)) fail(std::string("expected ") + shown + ", found " + describe(peek()), {shown});
  }

  Formula parse_iff() {
    Formula lhs = parse_implication();
    if (accept(Tok::iff)) return Formula::biconditional(std::move(lhs), parse_iff());
    return lhs;
  }

  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (accept(Tok::arrow)) return Formula::implication(std::move(lhs), parse_implication());
    return lhs;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (accept(Tok::bar)) f = Formula::disjunction(std::move(f), parse_conjunction());
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_unary();
    while (accept(Tok::amp)) f = Formula::conjunction(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Tok::tilde)) return Formula::negation(parse_unary());
    if (accept(Tok::box)) return Formula::box(parse_unary());
    if (accept(Tok::diamond)) return Formula::diamond(parse_unary());
    if (peek().kind == Tok::ident && (peek().text == "forall" || peek().text == "exists")) {
      const bool universal = take().text == "forall";
      std::string var = take_variable();
      Formula body = parse_unary();
      return universal ? Formula::forall(std::move(var), std::move(body))
                       : Formula::exists(std::move(var), std::move(body));
    }
    return parse_primary();
  }

  std::string take_variable() {
    if (peek().kind != Tok::ident || !is_variable_name(peek().text)) {
      fail("expected a variable, found " + describe(peek()), {"variable"});
    }
    return take().text;
  }

  Formula parse_primary() {
    if (accept(Tok::lparen)) {
      Formula f = parse_iff();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (peek().kind != Tok::ident) fail("unexpected " + describe(peek()), kOperandStart);

    const Token& tok = peek();
    if (tok.text == "true") {
      ++pos_;
      return Formula::verum();
    }
    if (tok.text == "false") {
      ++pos_;
      return Formula::falsum();
    }
    if (is_variable_name(tok.text)) {
      std::string lhs = take().text;
      expect(Tok::equals, "'='");
      std::string rhs = take_variable();
      return Formula::equality(std::move(lhs), std::move(rhs));
    }
    if (is_keyword(tok.text)) fail("unexpected " + describe(tok), kOperandStart);

    const Token letter = take();
    std::vector<std::string> args;
    if (accept(Tok::lparen)) {
      args.push_back(take_variable());
      while (accept(Tok::comma)) args.push_back(take_variable());
      expect(Tok::rparen, "')'");
    }
    const int arity = static_cast<int>(args.size());
    auto [it, inserted] = arities_.emplace(letter.text, arity);
    if (!inserted && it->second != arity) {
      throw ArityError(std::to_string(letter.line) + ":" + std::to_string(letter.column) +
                       ": letter " + letter.text + " used with arities " +
                       std::to_string(it->second) + " and " + std::to_string(arity));
    }
    return Formula::atom(letter.text, std::move(args));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, int> arities_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace monotrick
