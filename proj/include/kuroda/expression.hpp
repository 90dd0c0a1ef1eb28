#ifndef KURODA_EXPRESSION_HPP
#define KURODA_EXPRESSION_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kuroda/polynomial.hpp"
#include "kuroda/rational.hpp"

// Polynomial expressions over P1..P3 or Y1..Y4:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)*
//   primary := INTEGER ('/' INTEGER)? | VARIABLE | '(' expr ')'

namespace kuroda {

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column)
      : InputError(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
  enum class Kind { constant, variable, sum, product, power, negation };

  Kind kind = Kind::constant;
  Rational value;                 // constant
  VarSystem system = VarSystem::pi3;  // variable
  int index = 0;                  // variable, 0-based
  std::int64_t exponent = 0;      // power
  std::vector<ExprPtr> children;

  static ExprPtr constant(Rational v) {
    auto n = std::make_unique<ExprNode>();
    n->kind = Kind::constant;
    n->value = std::move(v);
    return n;
  }
  static ExprPtr variable(VarSystem s, int i) {
    auto n = std::make_unique<ExprNode>();
    n->kind = Kind::variable;
    n->system = s;
    n->index = i;
    return n;
  }
  static ExprPtr node(Kind k, std::vector<ExprPtr> children, std::int64_t exponent = 0) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->children = std::move(children);
    n->exponent = exponent;
    return n;
  }
};

namespace detail {

struct Token {
  enum class Kind { number, variable, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t count) {
    for (std::size_t c = 0; c < count; ++c, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::number;
      t.text = std::string(text.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::variable;
      t.text = std::string(text.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    switch (c) {
      case '+': t.kind = Token::Kind::plus; break;
      case '-': t.kind = Token::Kind::minus; break;
      case '*': t.kind = Token::Kind::star; break;
      case '^': t.kind = Token::Kind::caret; break;
      case '/': t.kind = Token::Kind::slash; break;
      case '(': t.kind = Token::Kind::lparen; break;
      case ')': t.kind = Token::Kind::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    t.text = std::string(1, c);
    out.push_back(t);
    advance(1);
  }
  Token end;
  end.kind = Token::Kind::end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse() {
    auto e = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  ExprPtr expr() {
    std::vector<ExprPtr> parts;
    parts.push_back(term());
    while (true) {
      if (accept(Token::Kind::plus)) {
        parts.push_back(term());
      } else if (accept(Token::Kind::minus)) {
        std::vector<ExprPtr> inner;
        inner.push_back(term());
        parts.push_back(ExprNode::node(ExprNode::Kind::negation, std::move(inner)));
      } else {
        break;
      }
    }
    if (parts.size() == 1) return std::move(parts.front());
    return ExprNode::node(ExprNode::Kind::sum, std::move(parts));
  }

  ExprPtr term() {
    std::vector<ExprPtr> parts;
    parts.push_back(unary());
    while (accept(Token::Kind::star)) parts.push_back(unary());
    if (parts.size() == 1) return std::move(parts.front());
    return ExprNode::node(ExprNode::Kind::product, std::move(parts));
  }

  ExprPtr unary() {
    if (accept(Token::Kind::minus)) {
      std::vector<ExprPtr> inner;
      inner.push_back(unary());
      return ExprNode::node(ExprNode::Kind::negation, std::move(inner));
    }
    if (accept(Token::Kind::plus)) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    while (accept(Token::Kind::caret)) {
      if (peek().kind != Token::Kind::number) fail("expected a non-negative integer exponent");
      const auto& tok = take();
      std::int64_t e = 0;
      try {
        e = std::stoll(tok.text);
      } catch (const std::exception&) {
        throw ParseError("exponent too large", tok.line, tok.column);
      }
      std::vector<ExprPtr> inner;
      inner.push_back(std::move(base));
      base = ExprNode::node(ExprNode::Kind::power, std::move(inner), e);
    }
    return base;
  }

  ExprPtr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::number: {
        take();
        Integer num(tok.text);
        if (accept(Token::Kind::slash)) {
          if (peek().kind != Token::Kind::number) fail("expected denominator after '/'");
          const auto& den_tok = take();
          Integer den(den_tok.text);
          if (den == 0) throw ParseError("zero denominator", den_tok.line, den_tok.column);
          return ExprNode::constant(Rational(num, den));
        }
        return ExprNode::constant(Rational(num));
      }
      case Token::Kind::variable: {
        take();
        return variable_node(tok);
      }
      case Token::Kind::lparen: {
        take();
        auto inner = expr();
        if (!accept(Token::Kind::rparen)) fail("expected ')'");
        return inner;
      }
      case Token::Kind::slash: fail("'/' is only allowed inside rational literals such as 3/4");
      case Token::Kind::end: fail("unexpected end of input");
      default: fail("unexpected '" + tok.text + "'");
    }
  }

  static ExprPtr variable_node(const Token& tok) {
    const auto& name = tok.text;
    if (name.size() == 2 && name[0] == 'P' && name[1] >= '1' && name[1] <= '3')
      return ExprNode::variable(VarSystem::pi3, name[1] - '1');
    if (name.size() == 2 && name[0] == 'Y' && name[1] >= '1' && name[1] <= '4')
      return ExprNode::variable(VarSystem::y4, name[1] - '1');
    throw ParseError("unknown variable '" + name + "' (expected P1..P3 or Y1..Y4)", tok.line, tok.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline void collect_systems(const ExprNode& n, std::optional<VarSystem>& seen) {
  if (n.kind == ExprNode::Kind::variable) {
    if (seen && *seen != n.system) throw InputError("expression mixes P and Y variables");
    seen = n.system;
  }
  for (const auto& c : n.children) collect_systems(*c, seen);
}

inline SparsePolynomial lower(const ExprNode& n, VarSystem system) {
  switch (n.kind) {
    case ExprNode::Kind::constant: return SparsePolynomial::constant(system, n.value);
    case ExprNode::Kind::variable: return SparsePolynomial::variable(system, n.index);
    case ExprNode::Kind::sum: {
      SparsePolynomial acc(system);
      for (const auto& c : n.children) acc += lower(*c, system);
      return acc;
    }
    case ExprNode::Kind::product: {
      auto acc = SparsePolynomial::constant(system, Rational(1));
      for (const auto& c : n.children) acc *= lower(*c, system);
      return acc;
    }
    case ExprNode::Kind::power: return pow(lower(*n.children.front(), system), n.exponent);
    case ExprNode::Kind::negation: return -lower(*n.children.front(), system);
  }
  throw std::logic_error("unknown expression node");
}

}  // namespace detail

inline ExprPtr parse_expression(std::string_view text) {
  return detail::Parser(detail::tokenize(text)).parse();
}

/// Variable system used by an expression; `fallback` when it has no variables.
inline VarSystem expression_system(const ExprNode& e, VarSystem fallback = VarSystem::pi3) {
  std::optional<VarSystem> seen;
  detail::collect_systems(e, seen);
  return seen.value_or(fallback);
}

inline SparsePolynomial to_polynomial(const ExprNode& e, VarSystem fallback = VarSystem::pi3) {
  return detail::lower(e, expression_system(e, fallback));
}

inline SparsePolynomial parse_polynomial(std::string_view text, VarSystem fallback = VarSystem::pi3) {
  return to_polynomial(*parse_expression(text), fallback);
}

/// Fully parenthesised rendering of an expression tree.
inline std::string to_string(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::constant: return "(" + to_string(n.value) + ")";
    case ExprNode::Kind::variable:
      return std::string(n.system == VarSystem::y4 ? "Y" : "P") + std::to_string(n.index + 1);
    case ExprNode::Kind::sum:
    case ExprNode::Kind::product: {
      std::string out = "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += n.kind == ExprNode::Kind::sum ? " + " : " * ";
        out += to_string(*n.children[i]);
      }
      return out + ")";
    }
    case ExprNode::Kind::power: return "(" + to_string(*n.children.front()) + ")^" + std::to_string(n.exponent);
    case ExprNode::Kind::negation: return "(-" + to_string(*n.children.front()) + ")";
  }
  return "?";
}

inline std::string variable_name(VarSystem s, int i) {
  switch (s) {
    case VarSystem::x4: return "X" + std::to_string(i + 1);
    case VarSystem::y4: return "Y" + std::to_string(i + 1);
    case VarSystem::pi3: return "P" + std::to_string(i + 1);
    case VarSystem::axis3: return "U" + std::to_string(i + 1);
    case VarSystem::chart3: return "C" + std::to_string(i + 1);
  }
  return "?";
}

/// Canonical text form: terms in lexicographic exponent order, e.g.
/// "-P2^2*P3 + 3/4*P1".  Pi and Y polynomials parse back to themselves.
inline std::string format_polynomial(const SparsePolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < arity(f.system()); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(f.system(), i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace kuroda

#endif  // KURODA_EXPRESSION_HPP
