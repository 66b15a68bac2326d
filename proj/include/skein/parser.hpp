#pragma once

// Expression front end over the generator vocabulary.
//
// Grammar (precedence ^ > unary - > * > binary +/-):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' ['-'] INT)?
//   atom    := INT | 'q' | 'x1' | 'x2' | 'y' | call | '(' expr ')'
//   call    := name '(' args ')'
//
// Builtins: G(n), J(n), Q(n), U(n), F(n), sigma(n), W(n), S(n, var),
// T(n, var), bk(n) for {n}, qi(n) for [n].  Negative exponents are only
// legal on q.  render() emits text this grammar accepts, so
// parse-then-eval is a left inverse of render.

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skein/generators.hpp"
#include "skein/ringcore.hpp"

namespace skein {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct IntLit { BigInt value; };
  struct Sym { std::string name; };  // q, x1, x2, y
  struct Neg { ExprPtr arg; };
  struct Bin { char op; ExprPtr lhs, rhs; };  // + - *
  struct Pow { ExprPtr base; int exp; };
  struct Call { std::string name; std::vector<int> int_args; std::string var; };

  std::variant<IntLit, Sym, Neg, Bin, Pow, Call> node;
};

namespace detail {

struct Token {
  enum Kind { Int, Ident, Op, End } kind;
  std::string text;
  int line, col;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(ch))) { ++col; ++i; continue; }
    int tcol = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Token::Int, text.substr(i, j - i), line, tcol});
      col += static_cast<int>(j - i);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), line, tcol});
      col += static_cast<int>(j - i);
      i = j;
    } else if (std::string("+-*^(),").find(ch) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, ch), line, tcol});
      ++col;
      ++i;
    } else {
      throw ParseError(line, tcol, std::string("unexpected character '") + ch +
                                       "'");
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (cur().kind != Token::End)
      throw ParseError(cur().line, cur().col,
                       "expected '+', '-', '*', '^' or end of input, got '" +
                           cur().text + "'");
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }
  bool accept_op(const std::string& op) {
    if (cur().kind == Token::Op && cur().text == op) {
      advance();
      return true;
    }
    return false;
  }
  void expect_op(const std::string& op, const std::string& what) {
    if (!accept_op(op))
      throw ParseError(cur().line, cur().col,
                       "expected '" + op + "' " + what + ", got '" +
                           (cur().kind == Token::End ? "end of input"
                                                     : cur().text) +
                           "'");
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (cur().kind == Token::Op && (cur().text == "+" || cur().text == "-")) {
      char op = cur().text[0];
      advance();
      lhs = std::make_shared<Expr>(Expr{Expr::Bin{op, lhs, term()}});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (accept_op("*"))
      lhs = std::make_shared<Expr>(Expr{Expr::Bin{'*', lhs, factor()}});
    return lhs;
  }

  ExprPtr factor() {
    if (accept_op("-"))
      return std::make_shared<Expr>(Expr{Expr::Neg{factor()}});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (accept_op("^")) {
      bool neg = accept_op("-");
      if (cur().kind != Token::Int)
        throw ParseError(cur().line, cur().col,
                         "expected integer exponent, got '" + cur().text + "'");
      int e = std::stoi(cur().text);
      advance();
      return std::make_shared<Expr>(Expr{Expr::Pow{base, neg ? -e : e}});
    }
    return base;
  }

  int int_arg() {
    bool neg = accept_op("-");
    if (cur().kind != Token::Int)
      throw ParseError(cur().line, cur().col,
                       "expected integer argument, got '" + cur().text + "'");
    int v = std::stoi(cur().text);
    advance();
    return neg ? -v : v;
  }

  ExprPtr atom() {
    if (cur().kind == Token::Int) {
      BigInt v(cur().text);
      advance();
      return std::make_shared<Expr>(Expr{Expr::IntLit{std::move(v)}});
    }
    if (accept_op("(")) {
      ExprPtr e = expr();
      expect_op(")", "to close parenthesis");
      return e;
    }
    if (cur().kind == Token::Ident) {
      std::string name = cur().text;
      int line = cur().line, col = cur().col;
      advance();
      if (name == "q" || name == "x1" || name == "x2" || name == "y")
        return std::make_shared<Expr>(Expr{Expr::Sym{name}});
      static const std::vector<std::string> one_arg = {
          "G", "J", "Q", "U", "F", "sigma", "W", "bk", "qi"};
      bool is_one_arg =
          std::find(one_arg.begin(), one_arg.end(), name) != one_arg.end();
      if (is_one_arg || name == "S" || name == "T") {
        expect_op("(", "after builtin '" + name + "'");
        Expr::Call call{name, {int_arg()}, ""};
        if (!is_one_arg) {
          expect_op(",", "between arguments of '" + name + "'");
          if (cur().kind != Token::Ident ||
              (cur().text != "x1" && cur().text != "x2" && cur().text != "y"))
            throw ParseError(cur().line, cur().col,
                             "expected variable x1, x2 or y, got '" +
                                 cur().text + "'");
          call.var = cur().text;
          advance();
        }
        expect_op(")", "to close call to '" + name + "'");
        return std::make_shared<Expr>(Expr{std::move(call)});
      }
      throw ParseError(line, col, "unknown identifier '" + name + "'");
    }
    throw ParseError(cur().line, cur().col,
                     "expected integer, symbol, builtin call or '(', got '" +
                         (cur().kind == Token::End ? "end of input"
                                                   : cur().text) +
                         "'");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(const std::string& text) {
  return detail::Parser(text).parse();
}

inline SkeinPoly eval(const ExprPtr& e);

namespace detail {

inline SkeinPoly eval_call(const Expr::Call& call) {
  int n = call.int_args[0];
  if (call.name == "G") return gen_G(n);
  if (call.name == "J") return gen_J(n);
  if (call.name == "Q") return gen_Q(n);
  if (call.name == "U") return gen_U(n);
  if (call.name == "F") return gen_F(n);
  if (call.name == "sigma") return gen_sigma(n);
  if (call.name == "W") return gen_W(n);
  if (call.name == "bk") return SkeinPoly(bracket(n));
  if (call.name == "qi") return SkeinPoly(qint(n));
  UniPoly p = call.name == "S" ? cheb_S(n) : cheb_T(n);
  if (call.var == "y") return p.at_y();
  return SkeinPoly(p.at_x(call.var == "x1" ? 1 : 2));
}

inline bool is_symbol_q(const ExprPtr& e) {
  const auto* sym = std::get_if<Expr::Sym>(&e->node);
  return sym && sym->name == "q";
}

}  // namespace detail

inline SkeinPoly eval(const ExprPtr& e) {
  struct Visitor {
    SkeinPoly operator()(const Expr::IntLit& i) const {
      return SkeinPoly(QLaurent(i.value));
    }
    SkeinPoly operator()(const Expr::Sym& s) const {
      if (s.name == "q") return SkeinPoly(QLaurent::q());
      if (s.name == "x1") return SkeinPoly::x1();
      if (s.name == "x2") return SkeinPoly::x2();
      return SkeinPoly::y();
    }
    SkeinPoly operator()(const Expr::Neg& n) const { return -eval(n.arg); }
    SkeinPoly operator()(const Expr::Bin& b) const {
      SkeinPoly lhs = eval(b.lhs), rhs = eval(b.rhs);
      switch (b.op) {
        case '+': return lhs + rhs;
        case '-': return lhs - rhs;
        default: return lhs * rhs;
      }
    }
    SkeinPoly operator()(const Expr::Pow& p) const {
      if (p.exp < 0) {
        if (!detail::is_symbol_q(p.base))
          throw EvalError("negative exponent is only allowed on q");
        return SkeinPoly(qpow(p.exp));
      }
      SkeinPoly base = eval(p.base);
      SkeinPoly r{QLaurent(1)};
      for (int i = 0; i < p.exp; ++i) r = r * base;
      return r;
    }
    SkeinPoly operator()(const Expr::Call& c) const {
      return detail::eval_call(c);
    }
  };
  return std::visit(Visitor{}, e->node);
}

// --- pretty printer ----------------------------------------------------

namespace detail {

// |coeff| * x1^a * x2^b * y^c as factors; the sign is reported separately
// when the coefficient is a single term, so the caller can join with '-'.
struct RenderedTerm {
  std::string body;
  bool negative = false;
};

inline RenderedTerm render_term(const QLaurent& coeff, int ex1, int ex2,
                                int ey) {
  RenderedTerm out;
  std::ostringstream s;
  std::vector<std::string> vars;
  auto add_var = [&](const char* name, int e) {
    if (e == 0) return;
    std::string v = name;
    if (e != 1) v += "^" + std::to_string(e);
    vars.push_back(std::move(v));
  };
  add_var("x1", ex1);
  add_var("x2", ex2);
  add_var("y", ey);

  bool single = coeff.terms().size() == 1;
  if (!single) {
    s << "(" << coeff.str() << ")";
  } else {
    const auto& [e, c] = *coeff.terms().begin();
    out.negative = c < 0;
    BigInt abs = out.negative ? BigInt(-c) : c;
    bool printed = false;
    if (abs != 1 || (e == 0 && vars.empty())) {
      s << abs;
      printed = true;
    }
    if (e != 0) {
      if (printed) s << "*";
      s << "q";
      if (e != 1) s << "^" << e;
      printed = true;
    }
    if (!printed && vars.empty()) s << 1;
  }
  for (const auto& v : vars) {
    if (!s.str().empty()) s << "*";
    s << v;
  }
  out.body = s.str();
  return out;
}

}  // namespace detail

// Canonical text form: descending y-degree, then ascending (x1, x2)
// exponents; multi-term q-coefficients are parenthesized.  The output is
// valid input for parse().
inline std::string render(const SkeinPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    for (const auto& [k, c] : it->second.terms()) {
      detail::RenderedTerm t =
          detail::render_term(c, k.first, k.second, it->first);
      if (first) {
        if (t.negative) out << "-";
        first = false;
      } else {
        out << (t.negative ? " - " : " + ");
      }
      out << t.body;
    }
  }
  return out.str();
}

inline std::string render(const XPoly& p) { return render(SkeinPoly(p)); }

}  // namespace skein
