#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leastinterp/jet.hpp"

namespace leastinterp {

// Series normalized to vanish at 0: exp(u)-1, log(1+u), sin(u), cos(u)-1.
enum class Builtin { Exp1m, Log1p, SinS, CosM1 };

const char* builtinName(Builtin b);
// Taylor coefficients c_0..c_order of the builtin at 0.
std::vector<Scalar> builtinSeries(Builtin b, int order);

// Immutable expression tree over variables t_1..t_n. Builders fold constant subtrees,
// so parse(print(e)) reproduces e exactly.
class Expression {
 public:
  enum class Kind { Literal, Variable, Add, Sub, Mul, Div, Neg, Pow, Call };

  static Expression literal(const Scalar& v);
  static Expression variable(std::size_t index);
  static Expression add(const Expression& a, const Expression& b);
  static Expression sub(const Expression& a, const Expression& b);
  static Expression mul(const Expression& a, const Expression& b);
  // b must be a nonzero constant.
  static Expression div(const Expression& a, const Expression& b);
  static Expression neg(const Expression& a);
  static Expression pow(const Expression& a, unsigned exponent);
  static Expression call(Builtin f, const Expression& a);

  // Throws SyntaxError with line and column.
  static Expression parse(std::string_view text, const std::vector<std::string>& variables);
  // "(e1, e2, ...)" or "e1, e2, ..."
  static std::vector<Expression> parseList(std::string_view text, const std::vector<std::string>& variables);

  Kind kind() const;
  const Scalar& value() const;
  std::size_t variableIndex() const;
  unsigned exponent() const;
  Builtin builtin() const;
  const std::vector<Expression>& children() const;

  std::string toString(const std::vector<std::string>& variables) const;

  // Taylor expansion at base to the given order. Throws NonRationalExpansion when a builtin's
  // argument does not vanish at base.
  Jet evaluate(const std::vector<Scalar>& base, int order) const;

  bool hasBuiltins() const;
  bool hasVariables() const;
  std::optional<Scalar> constantValue() const;
  // Total degree when builtin-free; nullopt otherwise.
  std::optional<int> polynomialDegree() const;
  // Degree with each builtin counted as the degree of its argument.
  int degreeHint() const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::shared_ptr<Node> makeNode(Kind k, std::vector<Expression> children);
  std::shared_ptr<const Node> node_;
};

// Default coordinate names: t for curves, s,t for surfaces, t1..tn beyond.
std::vector<std::string> defaultSourceNames(std::size_t n);
// x; x,y; x,y,z; x1..xm beyond.
std::vector<std::string> defaultTargetNames(std::size_t m);

}  // namespace leastinterp
