#include "beldef/parser.hpp"

#include <cctype>
#include <vector>

#include "beldef/errors.hpp"

namespace beldef {

namespace {

enum class Tok { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    const char c = text_[pos_];
    if (c == '(') { ++pos_; current_ = {Tok::LParen, "(", start}; return; }
    if (c == ')') { ++pos_; current_ = {Tok::RParen, ")", start}; return; }
    if (c == '!') { ++pos_; current_ = {Tok::Not, "!", start}; return; }
    if (c == '&') { ++pos_; current_ = {Tok::And, "&", start}; return; }
    if (c == '|') { ++pos_; current_ = {Tok::Or, "|", start}; return; }
    if (text_.compare(pos_, 3, "<->") == 0) { pos_ += 3; current_ = {Tok::Iff, "<->", start}; return; }
    if (text_.compare(pos_, 2, "->") == 0) { pos_ += 2; current_ = {Tok::Implies, "->", start}; return; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "true") { current_ = {Tok::True, word, start}; return; }
      if (word == "false") { current_ = {Tok::False, word, start}; return; }
      current_ = {Tok::Atom, word, start};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

class Parser {
 public:
  Parser(std::string_view text, Vocabulary& vocab) : lexer_(text), vocab_(vocab) {}

  Formula parse() {
    Formula f = parse_iff();
    if (lexer_.peek().kind != Tok::End) {
      throw ParseError("trailing input after formula", lexer_.peek().pos);
    }
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_imp();
    while (lexer_.peek().kind == Tok::Iff) {
      lexer_.take();
      f = Formula::iff(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (lexer_.peek().kind != Tok::Implies) return lhs;
    lexer_.take();
    return Formula::implies(std::move(lhs), parse_imp());
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lexer_.peek().kind == Tok::Or) {
      lexer_.take();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lexer_.peek().kind == Tok::And) {
      lexer_.take();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token t = lexer_.take();
    switch (t.kind) {
      case Tok::Not: return Formula::negate(parse_unary());
      case Tok::LParen: {
        Formula f = parse_iff();
        const Token close = lexer_.take();
        if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
        return f;
      }
      case Tok::True: return Formula::constant(true);
      case Tok::False: return Formula::constant(false);
      case Tok::Atom: return Formula::atom(vocab_.intern(t.text));
      default: throw ParseError("expected a formula", t.pos);
    }
  }

  Lexer lexer_;
  Vocabulary& vocab_;
};

}  // namespace

Formula parse_formula(std::string_view text, Vocabulary& vocab) {
  return Parser(text, vocab).parse();
}

}  // namespace beldef
