#include "leastinterp/expression.hpp"

#include <cctype>

#include "leastinterp/errors.hpp"

namespace leastinterp {

struct Expression::Node {
  Kind kind = Kind::Literal;
  Scalar value;
  std::size_t index = 0;
  unsigned exponent = 0;
  Builtin builtin = Builtin::Exp1m;
  std::vector<Expression> children;
};

const char* builtinName(Builtin b) {
  switch (b) {
    case Builtin::Exp1m: return "exp1m";
    case Builtin::Log1p: return "log1p";
    case Builtin::SinS: return "sinS";
    case Builtin::CosM1: return "cosM1";
  }
  return "?";
}

std::vector<Scalar> builtinSeries(Builtin b, int order) {
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  mpz_class fact = 1;
  for (int k = 1; k <= order; ++k) {
    fact *= k;
    Scalar invFact(mpq_class(mpz_class(1), fact));
    auto& slot = c[static_cast<std::size_t>(k)];
    switch (b) {
      case Builtin::Exp1m: slot = invFact; break;
      case Builtin::Log1p: slot = Scalar::fraction(k % 2 ? 1 : -1, k); break;
      case Builtin::SinS:
        if (k % 2) slot = ((k - 1) / 2) % 2 ? -invFact : invFact;
        break;
      case Builtin::CosM1:
        if (k % 2 == 0) slot = (k / 2) % 2 ? -invFact : invFact;
        break;
    }
  }
  return c;
}

namespace {

bool isLiteral(const Expression& e) { return e.kind() == Expression::Kind::Literal; }

}  // namespace

std::shared_ptr<Expression::Node> Expression::makeNode(Kind k, std::vector<Expression> children) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children = std::move(children);
  return n;
}

Expression Expression::literal(const Scalar& v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Literal;
  n->value = v;
  return Expression(n);
}

Expression Expression::variable(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->index = index;
  return Expression(n);
}

Expression Expression::add(const Expression& a, const Expression& b) {
  if (isLiteral(a) && isLiteral(b)) return literal(a.value() + b.value());
  return Expression(makeNode(Kind::Add, {a, b}));
}

Expression Expression::sub(const Expression& a, const Expression& b) {
  if (isLiteral(a) && isLiteral(b)) return literal(a.value() - b.value());
  return Expression(makeNode(Kind::Sub, {a, b}));
}

Expression Expression::mul(const Expression& a, const Expression& b) {
  if (isLiteral(a) && isLiteral(b)) return literal(a.value() * b.value());
  return Expression(makeNode(Kind::Mul, {a, b}));
}

Expression Expression::div(const Expression& a, const Expression& b) {
  auto c = b.constantValue();
  if (!c) throw Error(ErrorCode::InvalidArgument, "frontend", "division by a non-constant expression");
  if (c->isZero()) throw Error(ErrorCode::DivisionByZero, "frontend", "division by zero");
  if (isLiteral(a) && isLiteral(b)) return literal(a.value() / b.value());
  return Expression(makeNode(Kind::Div, {a, b}));
}

Expression Expression::neg(const Expression& a) {
  if (isLiteral(a)) return literal(-a.value());
  return Expression(makeNode(Kind::Neg, {a}));
}

Expression Expression::pow(const Expression& a, unsigned exponent) {
  if (isLiteral(a)) return literal(power(a.value(), exponent));
  auto n = makeNode(Kind::Pow, {a});
  n->exponent = exponent;
  return Expression(n);
}

Expression Expression::call(Builtin f, const Expression& a) {
  auto n = makeNode(Kind::Call, {a});
  n->builtin = f;
  return Expression(n);
}

Expression::Kind Expression::kind() const { return node_->kind; }
const Scalar& Expression::value() const { return node_->value; }
std::size_t Expression::variableIndex() const { return node_->index; }
unsigned Expression::exponent() const { return node_->exponent; }
Builtin Expression::builtin() const { return node_->builtin; }
const std::vector<Expression>& Expression::children() const { return node_->children; }

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Expression::Kind::Literal: return x.value == y.value;
    case Expression::Kind::Variable: return x.index == y.index;
    case Expression::Kind::Pow:
      if (x.exponent != y.exponent) return false;
      break;
    case Expression::Kind::Call:
      if (x.builtin != y.builtin) return false;
      break;
    default: break;
  }
  return x.children == y.children;
}

bool Expression::hasBuiltins() const {
  if (kind() == Kind::Call) return true;
  for (const auto& c : children())
    if (c.hasBuiltins()) return true;
  return false;
}

bool Expression::hasVariables() const {
  if (kind() == Kind::Variable) return true;
  for (const auto& c : children())
    if (c.hasVariables()) return true;
  return false;
}

std::optional<Scalar> Expression::constantValue() const {
  if (hasVariables()) return std::nullopt;
  return evaluate({}, 0).constantTerm();
}

std::optional<int> Expression::polynomialDegree() const {
  if (hasBuiltins()) return std::nullopt;
  return degreeHint();
}

int Expression::degreeHint() const {
  switch (kind()) {
    case Kind::Literal: return 0;
    case Kind::Variable: return 1;
    case Kind::Add:
    case Kind::Sub: return std::max(children()[0].degreeHint(), children()[1].degreeHint());
    case Kind::Mul: return children()[0].degreeHint() + children()[1].degreeHint();
    case Kind::Div:
    case Kind::Neg:
    case Kind::Call: return children()[0].degreeHint();
    case Kind::Pow: return static_cast<int>(exponent()) * children()[0].degreeHint();
  }
  return 0;
}

Jet Expression::evaluate(const std::vector<Scalar>& base, int order) const {
  switch (kind()) {
    case Kind::Literal: return Jet::constant(base, value(), order);
    case Kind::Variable:
      if (variableIndex() >= base.size())
        throw Error(ErrorCode::InvalidArgument, "frontend", "variable index beyond the base point");
      return Jet::coordinate(base, variableIndex(), order);
    case Kind::Add: return children()[0].evaluate(base, order) + children()[1].evaluate(base, order);
    case Kind::Sub: return children()[0].evaluate(base, order) - children()[1].evaluate(base, order);
    case Kind::Mul: return children()[0].evaluate(base, order) * children()[1].evaluate(base, order);
    case Kind::Div: {
      Scalar d = children()[1].evaluate(base, 0).constantTerm();
      return d.inverse() * children()[0].evaluate(base, order);
    }
    case Kind::Neg: return -children()[0].evaluate(base, order);
    case Kind::Pow: return children()[0].evaluate(base, order).pow(exponent());
    case Kind::Call: {
      Jet u = children()[0].evaluate(base, order);
      if (u.order() > order) u = u.truncated(order);
      if (!u.constantTerm().isZero())
        throw Error(ErrorCode::NonRationalExpansion, "frontend",
                    std::string(builtinName(builtin())) + " applied to an argument with value " +
                        u.constantTerm().toString() + " at the base point; it must vanish there");
      return u.composeSeries(builtinSeries(builtin(), order));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "frontend", "corrupt expression");
}

namespace {

constexpr int kPrecAdd = 1, kPrecMul = 2, kPrecNeg = 3, kPrecPow = 4, kPrecAtom = 5;

int literalPrecedence(const Scalar& v) {
  bool hasRe = sgn(v.re()) != 0, hasIm = sgn(v.im()) != 0;
  if (hasRe && hasIm) return kPrecAdd;
  const mpq_class& q = hasIm ? v.im() : v.re();
  if (hasIm || q.get_den() != 1) return kPrecMul;
  if (sgn(q) < 0) return kPrecNeg;
  return kPrecAtom;
}

struct Printed {
  std::string text;
  int prec;
};

Printed print(const Expression& e, const std::vector<std::string>& vars) {
  auto wrap = [&](const Expression& child, int need) {
    Printed p = print(child, vars);
    return p.prec < need ? "(" + p.text + ")" : p.text;
  };
  const auto& ch = e.children();
  switch (e.kind()) {
    case Expression::Kind::Literal: return {e.value().toString(), literalPrecedence(e.value())};
    case Expression::Kind::Variable: return {vars.at(e.variableIndex()), kPrecAtom};
    case Expression::Kind::Add: return {wrap(ch[0], kPrecAdd) + " + " + wrap(ch[1], kPrecMul), kPrecAdd};
    case Expression::Kind::Sub: return {wrap(ch[0], kPrecAdd) + " - " + wrap(ch[1], kPrecMul), kPrecAdd};
    case Expression::Kind::Mul: return {wrap(ch[0], kPrecMul) + "*" + wrap(ch[1], kPrecNeg), kPrecMul};
    case Expression::Kind::Div: return {wrap(ch[0], kPrecMul) + "/" + wrap(ch[1], kPrecNeg), kPrecMul};
    case Expression::Kind::Neg: return {"-" + wrap(ch[0], kPrecNeg), kPrecNeg};
    case Expression::Kind::Pow: return {wrap(ch[0], kPrecAtom) + "^" + std::to_string(e.exponent()), kPrecPow};
    case Expression::Kind::Call: return {std::string(builtinName(e.builtin())) + "(" + print(ch[0], vars).text + ")", kPrecAtom};
  }
  return {"?", kPrecAtom};
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  Expression expression() {
    Expression e = term();
    while (true) {
      if (accept('+')) {
        e = Expression::add(e, term());
      } else if (accept('-')) {
        e = Expression::sub(e, term());
      } else {
        return e;
      }
    }
  }

  std::vector<Expression> list() {
    skip();
    bool parens = false;
    // A leading '(' may open the tuple or just a parenthesized first component.
    std::size_t save = pos_;
    if (accept('(')) {
      std::size_t depth = 1, p = pos_;
      bool comma = false;
      for (; p < s_.size() && depth > 0; ++p) {
        if (s_[p] == '(') ++depth;
        if (s_[p] == ')') --depth;
        if (s_[p] == ',' && depth == 1) comma = true;
      }
      std::size_t after = p;
      while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after]))) ++after;
      parens = depth == 0 && (comma || after == s_.size());
      if (!parens) pos_ = save;
    }
    std::vector<Expression> out{expression()};
    while (accept(',')) out.push_back(expression());
    if (parens) expect(')');
    finish();
    return out;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

 private:
  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::SyntaxError, "frontend",
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expression term() {
    Expression e = unary();
    while (true) {
      if (accept('*')) {
        e = Expression::mul(e, unary());
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expression d = unary();
        try {
          e = Expression::div(e, d);
        } catch (const Error& err) {
          pos_ = at;
          fail(err.code() == ErrorCode::DivisionByZero ? "division by zero" : "divisor must be a constant");
        }
      } else {
        return e;
      }
    }
  }

  Expression unary() {
    if (accept('-')) return Expression::neg(unary());
    if (accept('+')) return unary();
    return powerExpr();
  }

  Expression powerExpr() {
    Expression base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      if (pos_ - start > 6) fail("exponent too large");
      return Expression::pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Expression primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expression::literal(Scalar(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Expression::variable(i);
      for (Builtin b : {Builtin::Exp1m, Builtin::Log1p, Builtin::SinS, Builtin::CosM1}) {
        if (name != builtinName(b)) continue;
        expect('(');
        Expression arg = expression();
        expect(')');
        return Expression::call(b, arg);
      }
      if (name == "i") return Expression::literal(Scalar::imaginaryUnit());
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    if (accept('(')) {
      Expression e = expression();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

std::string Expression::toString(const std::vector<std::string>& variables) const { return print(*this, variables).text; }

Expression Expression::parse(std::string_view text, const std::vector<std::string>& variables) {
  Parser p(text, variables);
  Expression e = p.expression();
  p.finish();
  return e;
}

std::vector<Expression> Expression::parseList(std::string_view text, const std::vector<std::string>& variables) {
  Parser p(text, variables);
  return p.list();
}

std::vector<std::string> defaultSourceNames(std::size_t n) {
  if (n == 1) return {"t"};
  if (n == 2) return {"s", "t"};
  return indexedNames("t", n);
}

std::vector<std::string> defaultTargetNames(std::size_t m) {
  if (m == 1) return {"x"};
  if (m == 2) return {"x", "y"};
  if (m == 3) return {"x", "y", "z"};
  return indexedNames("x", m);
}

}  // namespace leastinterp
