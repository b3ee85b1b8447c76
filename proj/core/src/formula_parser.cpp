#include <cctype>
#include <string>
#include <vector>

#include "itrev/errors.hpp"
#include "itrev/lang.hpp"

namespace itrev {
namespace {

enum class Tok { Ident, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Not, s.substr(i, 1), i}); ++i; continue;
      case '&': out.push_back({Tok::And, s.substr(i, 1), i}); ++i; continue;
      case '|': out.push_back({Tok::Or, s.substr(i, 1), i}); ++i; continue;
      case '(': out.push_back({Tok::LParen, s.substr(i, 1), i}); ++i; continue;
      case ')': out.push_back({Tok::RParen, s.substr(i, 1), i}); ++i; continue;
      default: break;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, s.substr(i, 2), i});
      i += 2;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, s.substr(i, 3), i});
      i += 3;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, {}, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig) : tokens_(std::move(tokens)), sig_(sig) {}

  Formula parse() {
    Formula f = biconditional();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + std::string(peek().text) + "'", peek().offset);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula biconditional() {
    Formula f = implication();
    while (accept(Tok::Iff)) f = Formula::biconditional(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (accept(Tok::Implies)) return Formula::implication(f, implication());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::Ident: {
        if (t.text == "true") return Formula::top();
        if (t.text == "false") return Formula::bottom();
        auto index = sig_.find(t.text);
        if (!index) throw UnknownAtomError(std::string(t.text), t.offset);
        return Formula::atom(*index);
      }
      case Tok::LParen: {
        Formula f = biconditional();
        if (peek().kind != Tok::RParen) {
          throw ParseError(peek().kind == Tok::End ? "missing ')'" : "expected ')'", peek().offset);
        }
        ++pos_;
        return f;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.offset);
      default: throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
    }
  }

  std::vector<Token> tokens_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  return Parser(tokenize(text), sig).parse();
}

}  // namespace itrev
