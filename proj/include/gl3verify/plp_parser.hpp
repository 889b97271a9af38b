#pragma once

// Parser for the piecewise-linear program input language.
//
//   program    := statement*
//   statement  := 'var' IDENT ('>=' '0')? ';'
//               | 'def' IDENT ':=' expr ';'
//               | 'maximize' expr ';'
//               | 'subject' 'to' expr ('<=' | '>=' | '==') expr ';'
//   expr       := term (('+' | '-') term)*
//   term       := factor (('*' | '/') factor)*
//   factor     := INT | IDENT | '(' expr ')' | '-' factor
//               | ('max' | 'min') '(' expr (',' expr)+ ')'
//
// '#' starts a comment running to the end of the line. 'var x >= 0;'
// declares a nonnegative variable, 'var x;' a free one. 'def' names an
// expression for reuse; references substitute the (already parsed)
// expression, so a def shares any max/min nodes it contains. Products
// need one constant operand and division needs a nonzero constant
// divisor, keeping everything piecewise-linear. All coefficients are
// exact rationals built from integer literals and arithmetic.

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gl3verify/plp.hpp"
#include "gl3verify/rational.hpp"

namespace gl3verify {

namespace plp_parser_detail {

struct Token {
  enum class Kind { kIdent, kNumber, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({Token::Kind::kNumber, text.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_'))
        ++j;
      tokens.push_back({Token::Kind::kIdent, text.substr(i, j - i)});
      i = j;
    } else if (i + 1 < n && (text.compare(i, 2, ">=") == 0 ||
                             text.compare(i, 2, "<=") == 0 ||
                             text.compare(i, 2, "==") == 0 ||
                             text.compare(i, 2, ":=") == 0)) {
      tokens.push_back({Token::Kind::kPunct, text.substr(i, 2)});
      i += 2;
    } else if (std::string("+-*/();,").find(c) != std::string::npos) {
      tokens.push_back({Token::Kind::kPunct, std::string(1, c)});
      ++i;
    } else {
      throw std::runtime_error(std::string("lp parse: bad character '") + c +
                               "'");
    }
  }
  tokens.push_back({Token::Kind::kEnd, ""});
  return tokens;
}

class ProgramParser {
 public:
  explicit ProgramParser(const std::string& text) : tokens_(tokenize(text)) {}

  PLProgram parse() {
    while (peek().kind != Token::Kind::kEnd) {
      const std::string head = eat_ident("statement keyword");
      if (head == "var") {
        parse_var();
      } else if (head == "def") {
        parse_def();
      } else if (head == "maximize") {
        if (have_objective_)
          throw std::runtime_error("lp parse: multiple objectives");
        program_.objective = expr();
        have_objective_ = true;
        eat_punct(";");
      } else if (head == "subject") {
        if (eat_ident("'to'") != "to")
          throw std::runtime_error("lp parse: expected 'to' after 'subject'");
        PLConstraint c;
        c.lhs = expr();
        const std::string op = eat_punct_any({"<=", ">=", "=="});
        c.op = op == "<=" ? Comparison::kLe
               : op == ">=" ? Comparison::kGe
                            : Comparison::kEq;
        c.rhs = expr();
        eat_punct(";");
        program_.constraints.push_back(std::move(c));
      } else {
        throw std::runtime_error("lp parse: unexpected statement '" + head +
                                 "'");
      }
    }
    if (!have_objective_)
      throw std::runtime_error("lp parse: missing objective");
    return std::move(program_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token eat() { return tokens_[pos_++]; }

  std::string eat_ident(const char* what) {
    if (peek().kind != Token::Kind::kIdent)
      throw std::runtime_error(std::string("lp parse: expected ") + what +
                               ", got '" + peek().text + "'");
    return eat().text;
  }

  void eat_punct(const std::string& p) {
    if (peek().kind != Token::Kind::kPunct || peek().text != p)
      throw std::runtime_error("lp parse: expected '" + p + "', got '" +
                               peek().text + "'");
    eat();
  }

  std::string eat_punct_any(const std::vector<std::string>& options) {
    for (const std::string& p : options)
      if (peek().kind == Token::Kind::kPunct && peek().text == p)
        return eat().text;
    throw std::runtime_error("lp parse: expected comparison, got '" +
                             peek().text + "'");
  }

  void parse_var() {
    const std::string name = eat_ident("variable name");
    declare(name);
    bool nonneg = false;
    if (peek().kind == Token::Kind::kPunct && peek().text == ">=") {
      eat();
      if (peek().kind != Token::Kind::kNumber || peek().text != "0")
        throw std::runtime_error("lp parse: variable bound must be '>= 0'");
      eat();
      nonneg = true;
    }
    eat_punct(";");
    program_.variables.emplace_back(name, nonneg);
    variables_.insert(name);
  }

  void parse_def() {
    const std::string name = eat_ident("definition name");
    declare(name);
    eat_punct(":=");
    defs_.emplace(name, expr());
    eat_punct(";");
  }

  void declare(const std::string& name) {
    if (variables_.count(name) || defs_.count(name) || name == "max" ||
        name == "min")
      throw std::runtime_error("lp parse: duplicate or reserved name '" +
                               name + "'");
  }

  PLExpr expr() {
    PLExpr e = term();
    while (peek().kind == Token::Kind::kPunct &&
           (peek().text == "+" || peek().text == "-")) {
      const bool plus = eat().text == "+";
      e.accumulate(term(), plus ? 1 : -1);
    }
    return e;
  }

  PLExpr term() {
    PLExpr e = factor();
    while (peek().kind == Token::Kind::kPunct &&
           (peek().text == "*" || peek().text == "/")) {
      const bool mul = eat().text == "*";
      PLExpr f = factor();
      if (mul) {
        if (f.is_constant()) {
          e = e.scaled(f.affine.constant);
        } else if (e.is_constant()) {
          e = f.scaled(e.affine.constant);
        } else {
          throw std::runtime_error(
              "lp parse: product needs a constant operand");
        }
      } else {
        if (!f.is_constant() || f.affine.constant == 0)
          throw std::runtime_error(
              "lp parse: division needs a nonzero constant divisor");
        e = e.scaled(Rational(1) / f.affine.constant);
      }
    }
    return e;
  }

  PLExpr factor() {
    const Token& t = peek();
    if (t.kind == Token::Kind::kPunct && t.text == "-") {
      eat();
      return factor().scaled(-1);
    }
    if (t.kind == Token::Kind::kPunct && t.text == "(") {
      eat();
      PLExpr e = expr();
      eat_punct(")");
      return e;
    }
    if (t.kind == Token::Kind::kIdent && (t.text == "max" || t.text == "min")) {
      const NodeKind kind = eat().text == "max" ? NodeKind::kMax : NodeKind::kMin;
      eat_punct("(");
      std::vector<PLExpr> args;
      args.push_back(expr());
      while (peek().kind == Token::Kind::kPunct && peek().text == ",") {
        eat();
        args.push_back(expr());
      }
      eat_punct(")");
      if (args.size() < 2)
        throw std::runtime_error(
            "lp parse: max/min need at least two arguments");
      const int id = program_.pool.intern(kind, std::move(args));
      PLExpr e;
      e.node_terms[id] = 1;
      return e;
    }
    if (t.kind == Token::Kind::kNumber) {
      PLExpr e;
      e.affine.constant = Rational(BigInt(eat().text));
      return e;
    }
    if (t.kind == Token::Kind::kIdent) {
      const std::string name = eat().text;
      auto def = defs_.find(name);
      if (def != defs_.end()) return def->second;
      if (variables_.count(name)) {
        PLExpr e;
        e.affine.coeffs[name] = 1;
        return e;
      }
      throw std::runtime_error("lp parse: unknown identifier '" + name + "'");
    }
    throw std::runtime_error("lp parse: unexpected token '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  PLProgram program_;
  std::set<std::string> variables_;
  std::map<std::string, PLExpr> defs_;
  bool have_objective_ = false;
};

}  // namespace plp_parser_detail

inline PLProgram parse_program(const std::string& text) {
  return plp_parser_detail::ProgramParser(text).parse();
}

}  // namespace gl3verify
