#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdiff/classical.hpp"
#include "qdiff/opalg.hpp"
#include "qdiff/qplane.hpp"
#include "qdiff/quantum_group.hpp"
#include "qdiff/scalar.hpp"
#include "qdiff/tseries.hpp"

namespace qdiff {

/// Syntax error with the position of the offending token and what the
/// parser was prepared to accept there.
struct ParseError : std::runtime_error {
  int line;
  int col;
  std::string expected;
  ParseError(int line_, int col_, std::string expected_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": expected " + expected_),
        line(line_),
        col(col_),
        expected(std::move(expected_)) {}
};

/// Semantic error while evaluating a syntactically valid expression.
struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree produced by the parser. Sums carry one sign per child;
/// products carry one divide flag per child (the first is never divided).
struct Expr {
  enum class Kind { Number, Atom, Sum, Prod, Neg, Pow, Bracket };
  Kind kind;

  Int value;                    // Number
  std::string name;             // Atom
  std::vector<long long> args;  // Atom arguments, e.g. dxb(2), sigma(1,-1)
  bool has_args = false;

  std::vector<ExprPtr> kids;
  std::vector<int> signs;       // Sum: +1 / -1 per child
  std::vector<bool> divides;    // Prod: true where the child is divided
  long long expo = 0;           // Pow
  GradeVec twist{0, 0};         // Bracket
  bool has_twist = false;

  static ExprPtr number(Int v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Number;
    e->value = std::move(v);
    return e;
  }
  static ExprPtr atom(std::string n, std::vector<long long> a, bool has) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Atom;
    e->name = std::move(n);
    e->args = std::move(a);
    e->has_args = has;
    return e;
  }
};

inline bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number:
      return a.value == b.value;
    case Expr::Kind::Atom:
      return a.name == b.name && a.has_args == b.has_args && a.args == b.args;
    default:
      break;
  }
  if (a.kids.size() != b.kids.size() || a.signs != b.signs ||
      a.divides != b.divides || a.expo != b.expo || a.has_twist != b.has_twist ||
      !(a.twist == b.twist))
    return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!expr_equal(*a.kids[i], *b.kids[i])) return false;
  return true;
}

namespace detail {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  Int number;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : s_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text = "end of input";
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::Number;
      tok_.text = s_.substr(start, pos_ - start);
      tok_.number = Int(tok_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::Ident;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::string("+-*/^()[],;").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Symbol;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    throw ParseError(line_, col_, "a token (unexpected character '" +
                                      std::string(1, c) + "')");
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End)
      throw ParseError(t.line, t.col, "end of input");
    return e;
  }

 private:
  bool at_symbol(const char* s) const {
    const Token& t = lex_.peek();
    return t.kind == Token::Kind::Symbol && t.text == s;
  }

  void expect_symbol(const char* s) {
    if (!at_symbol(s)) {
      const Token& t = lex_.peek();
      throw ParseError(t.line, t.col, std::string("'") + s + "'");
    }
    lex_.take();
  }

  long long signed_int() {
    int sign = 1;
    if (at_symbol("-")) {
      lex_.take();
      sign = -1;
    }
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::Number)
      throw ParseError(t.line, t.col, "an integer");
    Token n = lex_.take();
    return sign * n.number.convert_to<long long>();
  }

  ExprPtr sum() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Sum;
    int lead = 1;
    if (at_symbol("-")) {
      lex_.take();
      lead = -1;
    } else if (at_symbol("+")) {
      lex_.take();
    }
    node->kids.push_back(term());
    node->signs.push_back(lead);
    while (at_symbol("+") || at_symbol("-")) {
      int sign = lex_.take().text == "+" ? 1 : -1;
      node->kids.push_back(term());
      node->signs.push_back(sign);
    }
    if (node->kids.size() == 1 && node->signs[0] == 1) return node->kids[0];
    if (node->kids.size() == 1) {
      auto neg = std::make_shared<Expr>();
      neg->kind = Expr::Kind::Neg;
      neg->kids.push_back(node->kids[0]);
      return neg;
    }
    return node;
  }

  ExprPtr term() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Prod;
    node->kids.push_back(power());
    node->divides.push_back(false);
    while (at_symbol("*") || at_symbol("/")) {
      bool div = lex_.take().text == "/";
      node->kids.push_back(power());
      node->divides.push_back(div);
    }
    if (node->kids.size() == 1) return node->kids[0];
    return node;
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!at_symbol("^")) return base;
    lex_.take();
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Pow;
    node->kids.push_back(base);
    node->expo = signed_int();
    return node;
  }

  ExprPtr primary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      Token n = lex_.take();
      return Expr::number(n.number);
    }
    if (t.kind == Token::Kind::Ident) {
      Token id = lex_.take();
      if (at_symbol("(")) {
        lex_.take();
        std::vector<long long> args;
        args.push_back(signed_int());
        while (at_symbol(",")) {
          lex_.take();
          args.push_back(signed_int());
        }
        expect_symbol(")");
        return Expr::atom(id.text, std::move(args), true);
      }
      return Expr::atom(id.text, {}, false);
    }
    if (at_symbol("(")) {
      lex_.take();
      ExprPtr e = sum();
      expect_symbol(")");
      return e;
    }
    if (at_symbol("[")) {
      lex_.take();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Bracket;
      node->kids.push_back(sum());
      expect_symbol(",");
      node->kids.push_back(sum());
      if (at_symbol(";")) {
        lex_.take();
        node->has_twist = true;
        int p = static_cast<int>(signed_int());
        expect_symbol(",");
        int r = static_cast<int>(signed_int());
        node->twist = {p, r};
      }
      expect_symbol("]");
      return node;
    }
    throw ParseError(t.line, t.col, "a number, name, '(', or '['");
  }

  Lexer lex_;
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& src) {
  return detail::Parser(src).parse();
}

namespace detail {

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum:
    case Expr::Kind::Neg:
      return 0;
    case Expr::Kind::Prod:
      return 1;
    case Expr::Kind::Pow:
      return 2;
    default:
      return 3;
  }
}

inline void serialize(const Expr& e, std::string& out);

inline void serialize_child(const Expr& child, int min_prec, std::string& out) {
  if (precedence(child) < min_prec) {
    out += "(";
    serialize(child, out);
    out += ")";
  } else {
    serialize(child, out);
  }
}

inline void serialize(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Number:
      out += e.value.str();
      return;
    case Expr::Kind::Atom:
      out += e.name;
      if (e.has_args) {
        out += "(";
        for (size_t i = 0; i < e.args.size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(e.args[i]);
        }
        out += ")";
      }
      return;
    case Expr::Kind::Sum:
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i == 0) {
          if (e.signs[0] < 0) out += "-";
        } else {
          out += e.signs[i] > 0 ? " + " : " - ";
        }
        serialize_child(*e.kids[i], 1, out);
      }
      return;
    case Expr::Kind::Neg:
      out += "-";
      serialize_child(*e.kids[0], 1, out);
      return;
    case Expr::Kind::Prod:
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) out += e.divides[i] ? "/" : "*";
        serialize_child(*e.kids[i], 2, out);
      }
      return;
    case Expr::Kind::Pow:
      serialize_child(*e.kids[0], 3, out);
      out += "^" + std::to_string(e.expo);
      return;
    case Expr::Kind::Bracket:
      out += "[";
      serialize(*e.kids[0], out);
      out += ", ";
      serialize(*e.kids[1], out);
      if (e.has_twist) {
        out += "; " + std::to_string(e.twist.p) + ", " + std::to_string(e.twist.r);
      }
      out += "]";
      return;
  }
}

}  // namespace detail

inline std::string expr_to_string(const Expr& e) {
  std::string out;
  detail::serialize(e, out);
  return out;
}

namespace detail {

inline void need_args(const Expr& e, size_t n) {
  if (!e.has_args || e.args.size() != n)
    throw EvalError("'" + e.name + "' takes " + std::to_string(n) +
                    " integer argument(s)");
}

inline void need_no_args(const Expr& e) {
  if (e.has_args) throw EvalError("'" + e.name + "' takes no arguments");
}

/// Evaluate an expression tree in a value domain. The domain provides the
/// carrier type, embeds scalars, multiplies values, resolves named atoms,
/// and decides which values count as scalars (for division and negative
/// powers).
template <typename Domain>
typename Domain::Value eval_expr_in(const Expr& e) {
  using V = typename Domain::Value;
  switch (e.kind) {
    case Expr::Kind::Number:
      return Domain::embed(Scalar(e.value));
    case Expr::Kind::Atom:
      if (e.name == "q") {
        need_no_args(e);
        return Domain::embed(Scalar::q());
      }
      if (e.name == "s") {
        need_no_args(e);
        return Domain::embed(Scalar::s_power(1));
      }
      return Domain::atom(e);
    case Expr::Kind::Sum: {
      V acc = eval_expr_in<Domain>(*e.kids[0]);
      if (e.signs[0] < 0) acc = Scalar(-1) * acc;
      for (size_t i = 1; i < e.kids.size(); ++i) {
        V next = eval_expr_in<Domain>(*e.kids[i]);
        acc = e.signs[i] > 0 ? acc + next : acc - next;
      }
      return acc;
    }
    case Expr::Kind::Neg:
      return Scalar(-1) * eval_expr_in<Domain>(*e.kids[0]);
    case Expr::Kind::Prod: {
      V acc = eval_expr_in<Domain>(*e.kids[0]);
      for (size_t i = 1; i < e.kids.size(); ++i) {
        V next = eval_expr_in<Domain>(*e.kids[i]);
        if (e.divides[i]) {
          std::optional<Scalar> c = Domain::as_scalar(next);
          if (!c) throw EvalError("division requires a scalar divisor");
          if (c->is_zero()) throw EvalError("division by zero");
          acc = (Scalar(1) / *c) * acc;
        } else {
          acc = Domain::mul(acc, next);
        }
      }
      return acc;
    }
    case Expr::Kind::Pow: {
      V base = eval_expr_in<Domain>(*e.kids[0]);
      long long n = e.expo;
      if (n < 0) {
        std::optional<V> ib = Domain::inv(base);
        if (!ib) throw EvalError("negative powers require an invertible base");
        base = *ib;
        n = -n;
      }
      V acc = Domain::embed(Scalar(1));
      for (long long i = 0; i < n; ++i) acc = Domain::mul(acc, base);
      return acc;
    }
    case Expr::Kind::Bracket:
      return Domain::bracket(eval_expr_in<Domain>(*e.kids[0]),
                             eval_expr_in<Domain>(*e.kids[1]), e.twist);
  }
  throw EvalError("malformed expression tree");
}

struct OperatorDomain {
  using Value = OperatorNF;
  static Value embed(const Scalar& c) { return c * OperatorNF::identity(); }
  static Value mul(const Value& a, const Value& b) { return compose(a, b); }
  static std::optional<Scalar> as_scalar(const Value& v) {
    if (v.is_zero()) return Scalar(0);
    const auto& terms = v.terms();
    if (terms.size() != 1) return std::nullopt;
    const auto& [sh, co] = *terms.begin();
    if (!(sh == Shift{0, 0})) return std::nullopt;
    const auto& cterms = co.terms();
    if (cterms.size() != 1) return std::nullopt;
    const auto& [mono, c] = *cterms.begin();
    if (mono.n != 0 || mono.m != 0 || mono.u != 0 || mono.v != 0)
      return std::nullopt;
    return c;
  }
  /// Inverts the diagonal units: nonzero scalar multiples of U^u V^v.
  static std::optional<Value> inv(const Value& v) {
    const auto& terms = v.terms();
    if (terms.size() != 1) return std::nullopt;
    const auto& [sh, co] = *terms.begin();
    if (!(sh == Shift{0, 0})) return std::nullopt;
    const auto& cterms = co.terms();
    if (cterms.size() != 1) return std::nullopt;
    const auto& [mono, c] = *cterms.begin();
    if (mono.n != 0 || mono.m != 0 || c.is_zero()) return std::nullopt;
    return OperatorNF::single(
        {0, 0}, EigenCoeff::monomial({0, 0, -mono.u, -mono.v}, c.inv()));
  }
  static Value bracket(const Value& a, const Value& b, GradeVec tw) {
    return bracket_g(a, b, tw);
  }
  static Value atom(const Expr& e) {
    const std::string& n = e.name;
    if (n == "id") {
      need_no_args(e);
      return OperatorNF::identity();
    }
    if (n == "lambda_x") {
      need_no_args(e);
      return OperatorNF::lambda_x();
    }
    if (n == "rho_y") {
      need_no_args(e);
      return OperatorNF::rho_y();
    }
    if (n == "lambda_y") {
      need_no_args(e);
      return OperatorNF::lambda_y();
    }
    if (n == "rho_x") {
      need_no_args(e);
      return OperatorNF::rho_x();
    }
    if (n == "dx") {
      need_no_args(e);
      return OperatorNF::dx();
    }
    if (n == "dy") {
      need_no_args(e);
      return OperatorNF::dy();
    }
    if (n == "tau_x") {
      need_no_args(e);
      return OperatorNF::tau_x();
    }
    if (n == "tau_y") {
      need_no_args(e);
      return OperatorNF::tau_y();
    }
    if (n == "dxb") {
      need_args(e, 1);
      return OperatorNF::dxb(e.args[0]);
    }
    if (n == "dyb") {
      need_args(e, 1);
      return OperatorNF::dyb(e.args[0]);
    }
    if (n == "sigma") {
      need_args(e, 2);
      return OperatorNF::sigma(static_cast<int>(e.args[0]),
                               static_cast<int>(e.args[1]));
    }
    if (n == "N") {
      need_no_args(e);
      return OperatorNF::tau_x();
    }
    if (n == "M") {
      need_no_args(e);
      return OperatorNF::tau_y();
    }
    if (n == "U") {
      need_no_args(e);
      return OperatorNF::single({0, 0}, EigenCoeff::u_power(1));
    }
    if (n == "V") {
      need_no_args(e);
      return OperatorNF::single({0, 0}, EigenCoeff::v_power(1));
    }
    if (n == "shift") {
      need_args(e, 2);
      return OperatorNF::fragment(
          {static_cast<int>(e.args[0]), static_cast<int>(e.args[1])},
          EigenCoeff::one());
    }
    if (n == "dX") {
      need_no_args(e);
      return dx_div(1);
    }
    if (n == "dY") {
      need_no_args(e);
      return dy_div(1);
    }
    if (n == "E") {
      need_no_args(e);
      return phi(UqElement::e());
    }
    if (n == "F") {
      need_no_args(e);
      return phi(UqElement::f());
    }
    if (n == "K") {
      need_no_args(e);
      return phi(UqElement::k());
    }
    if (n == "Kinv") {
      need_no_args(e);
      return phi(UqElement::kinv());
    }
    if (n == "Ediv") {
      need_args(e, 1);
      if (e.args[0] < 0) throw EvalError("'Ediv' needs a nonnegative argument");
      return phi(divided_power_e(static_cast<int>(e.args[0])));
    }
    if (n == "Fdiv") {
      need_args(e, 1);
      if (e.args[0] < 0) throw EvalError("'Fdiv' needs a nonnegative argument");
      return phi(divided_power_f(static_cast<int>(e.args[0])));
    }
    throw EvalError("unknown operator name '" + n + "'");
  }
};

struct PlaneDomain {
  using Value = PlaneElement;
  static Value embed(const Scalar& c) { return PlaneElement::monomial(0, 0, c); }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static std::optional<Scalar> as_scalar(const Value& v) {
    if (v.terms().empty()) return Scalar(0);
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [mono, c] = *v.terms().begin();
    if (mono.i != 0 || mono.j != 0) return std::nullopt;
    return c;
  }
  static std::optional<Value> inv(const Value& v) {
    std::optional<Scalar> c = as_scalar(v);
    if (!c || c->is_zero()) return std::nullopt;
    return embed(c->inv());
  }
  static Value bracket(const Value&, const Value&, GradeVec) {
    throw EvalError("brackets are defined for operators, not plane elements");
  }
  static Value atom(const Expr& e) {
    need_no_args(e);
    if (e.name == "x") return PlaneElement::monomial(1, 0);
    if (e.name == "y") return PlaneElement::monomial(0, 1);
    throw EvalError("unknown plane element name '" + e.name + "'");
  }
};

struct ScalarDomain {
  using Value = Scalar;
  static Value embed(const Scalar& c) { return c; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static std::optional<Scalar> as_scalar(const Value& v) { return v; }
  static std::optional<Value> inv(const Value& v) {
    if (v.is_zero()) return std::nullopt;
    return v.inv();
  }
  static Value bracket(const Value&, const Value&, GradeVec) {
    throw EvalError("brackets are defined for operators, not scalars");
  }
  static Value atom(const Expr& e) {
    throw EvalError("unknown scalar name '" + e.name + "'");
  }
};

struct UqDomain {
  using Value = UqElement;
  static Value embed(const Scalar& c) { return c * UqElement::one(); }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static std::optional<Scalar> as_scalar(const Value& v) {
    if (v.terms().empty()) return Scalar(0);
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [mono, c] = *v.terms().begin();
    if (mono.a != 0 || mono.b != 0 || mono.c != 0) return std::nullopt;
    return c;
  }
  /// Inverts the torus part: nonzero scalar multiples of K^b.
  static std::optional<Value> inv(const Value& v) {
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [mono, c] = *v.terms().begin();
    if (mono.a != 0 || mono.c != 0 || c.is_zero()) return std::nullopt;
    return c.inv() * UqElement::monomial({0, -mono.b, 0});
  }
  static Value bracket(const Value& a, const Value& b, GradeVec tw) {
    if (!(tw == GradeVec{0, 0}))
      throw EvalError("twisted brackets are defined for operators only");
    return a * b - b * a;
  }
  static Value atom(const Expr& e) {
    const std::string& n = e.name;
    if (n == "E") {
      need_no_args(e);
      return UqElement::e();
    }
    if (n == "F") {
      need_no_args(e);
      return UqElement::f();
    }
    if (n == "K") {
      need_no_args(e);
      return UqElement::k();
    }
    if (n == "Kinv") {
      need_no_args(e);
      return UqElement::kinv();
    }
    if (n == "Ediv") {
      need_args(e, 1);
      if (e.args[0] < 0) throw EvalError("'Ediv' needs a nonnegative argument");
      return divided_power_e(static_cast<int>(e.args[0]));
    }
    if (n == "Fdiv") {
      need_args(e, 1);
      if (e.args[0] < 0) throw EvalError("'Fdiv' needs a nonnegative argument");
      return divided_power_f(static_cast<int>(e.args[0]));
    }
    throw EvalError("unknown quantized algebra name '" + n + "'");
  }
};

}  // namespace detail

/// Evaluates in the operator domain and validates the final result. Raw
/// shift(a, b) fragments may appear mid-expression (the normal-form dump
/// uses them), but the value of the whole expression must be a well-defined
/// operator on the plane; otherwise IllFormedOperator propagates.
inline OperatorNF eval_operator(const Expr& e) {
  OperatorNF r = detail::eval_expr_in<detail::OperatorDomain>(e);
  r.validate();
  return r;
}
inline PlaneElement eval_plane(const Expr& e) {
  return detail::eval_expr_in<detail::PlaneDomain>(e);
}
inline Scalar eval_scalar(const Expr& e) {
  return detail::eval_expr_in<detail::ScalarDomain>(e);
}
inline UqElement eval_uq(const Expr& e) {
  return detail::eval_expr_in<detail::UqDomain>(e);
}

inline OperatorNF parse_operator(const std::string& src) {
  return eval_operator(*parse_expr(src));
}

/// Grammar form of a normal form: one shift(a, b)*(coefficient) factor per
/// component, so the output reparses to an equal operator.
inline std::string operator_to_expr_string(const OperatorNF& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [sh, c] : op.terms()) {
    if (!out.empty()) out += " + ";
    out += "shift(" + std::to_string(sh.a) + ", " + std::to_string(sh.b) +
           ")*(" + c.to_string() + ")";
  }
  return out;
}
inline PlaneElement parse_plane(const std::string& src) {
  return eval_plane(*parse_expr(src));
}
inline Scalar parse_scalar(const std::string& src) {
  return eval_scalar(*parse_expr(src));
}
inline UqElement parse_uq(const std::string& src) {
  return eval_uq(*parse_expr(src));
}

namespace detail {

/// Evaluator for classical-limit series text: Weyl atoms u, v, Du, Dv, the
/// deformation variable t, and rational number coefficients. Division is
/// restricted to literal integer divisors, which is all the printed form
/// ever produces.
inline TSeries<WeylElement> eval_weyl_series(const Expr& e, int order) {
  using WS = TSeries<WeylElement>;
  auto constant = [order](const WeylElement& w) { return WS::constant(w, order); };
  auto scale = [&](const Rational& r) { return constant(r * WeylElement::one()); };
  switch (e.kind) {
    case Expr::Kind::Number:
      return scale(Rational(e.value));
    case Expr::Kind::Atom:
      need_no_args(e);
      if (e.name == "u") return constant(WeylElement::lu());
      if (e.name == "v") return constant(WeylElement::lv());
      if (e.name == "Du") return constant(WeylElement::du());
      if (e.name == "Dv") return constant(WeylElement::dv());
      if (e.name == "t") return WS::var(order);
      throw EvalError("unknown classical series name '" + e.name + "'");
    case Expr::Kind::Sum: {
      WS acc = eval_weyl_series(*e.kids[0], order);
      if (e.signs[0] < 0) acc = scale(-1) * acc;
      for (size_t i = 1; i < e.kids.size(); ++i) {
        WS next = eval_weyl_series(*e.kids[i], order);
        acc = e.signs[i] > 0 ? acc + next : acc - next;
      }
      return acc;
    }
    case Expr::Kind::Neg:
      return scale(-1) * eval_weyl_series(*e.kids[0], order);
    case Expr::Kind::Prod: {
      WS acc = eval_weyl_series(*e.kids[0], order);
      for (size_t i = 1; i < e.kids.size(); ++i) {
        if (e.divides[i]) {
          if (e.kids[i]->kind != Expr::Kind::Number)
            throw EvalError("division requires a literal integer divisor");
          if (e.kids[i]->value == 0) throw EvalError("division by zero");
          acc = acc * scale(Rational(1, e.kids[i]->value));
        } else {
          acc = acc * eval_weyl_series(*e.kids[i], order);
        }
      }
      return acc;
    }
    case Expr::Kind::Pow: {
      if (e.expo < 0)
        throw EvalError("negative powers are not defined for classical series");
      WS base = eval_weyl_series(*e.kids[0], order);
      WS acc = WS::one(order);
      for (long long i = 0; i < e.expo; ++i) acc = acc * base;
      return acc;
    }
    case Expr::Kind::Bracket:
      throw EvalError("brackets are not defined for classical series");
  }
  throw EvalError("malformed expression tree");
}

}  // namespace detail

/// Parses the printed form of a classical-limit series. The trailing
/// "+ O(t^K)" marker is mandatory and fixes the truncation order, so the
/// result compares equal to the series that printed the text.
inline TSeries<WeylElement> parse_weyl_series(const std::string& src) {
  const std::string marker = " + O(t^";
  size_t pos = src.rfind(marker);
  if (pos == std::string::npos || src.empty() || src.back() != ')')
    throw ParseError(1, 1, "a series ending in '+ O(t^K)'");
  std::string digits = src.substr(pos + marker.size(),
                                  src.size() - pos - marker.size() - 1);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(1, 1, "an integer truncation order in O(t^K)");
  int order = std::stoi(digits);
  return detail::eval_weyl_series(*parse_expr(src.substr(0, pos)), order);
}

}  // namespace qdiff
