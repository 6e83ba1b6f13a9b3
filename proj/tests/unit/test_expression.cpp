#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "leastinterp/expression.hpp"
#include "leastinterp/parametrization.hpp"
#include "test_util.hpp"

using namespace leastinterp;
using testutil::codeOf;

namespace {

Expression randomTree(corpus::Rng& rng, std::size_t n, int depth) {
  if (depth == 0 || rng.coin(4)) {
    if (rng.coin(2)) return Expression::variable(static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1)));
    return Expression::literal(rng.gaussian());
  }
  switch (rng.integer(0, 6)) {
    case 0: return Expression::add(randomTree(rng, n, depth - 1), randomTree(rng, n, depth - 1));
    case 1: return Expression::sub(randomTree(rng, n, depth - 1), randomTree(rng, n, depth - 1));
    case 2: return Expression::mul(randomTree(rng, n, depth - 1), randomTree(rng, n, depth - 1));
    case 3: return Expression::neg(randomTree(rng, n, depth - 1));
    case 4: return Expression::pow(randomTree(rng, n, depth - 1), static_cast<unsigned>(rng.integer(0, 3)));
    case 5: {
      Scalar d = rng.rational();
      if (d.isZero()) d = Scalar(3);
      return Expression::div(randomTree(rng, n, depth - 1), Expression::literal(d));
    }
    default:
      return Expression::call(static_cast<Builtin>(rng.integer(0, 3)), randomTree(rng, n, depth - 1));
  }
}

}  // namespace

TEST_CASE("parse and print") {
  std::vector<std::string> t = {"t"};
  auto comps = Expression::parseList("(t, t^2 + t^6)", t);
  REQUIRE(comps.size() == 2);
  CHECK(comps[1].toString(t) == "t^2 + t^6");
  CHECK(Expression::parse("-(t - 1)^2/2", t).toString(t) == "-(t - 1)^2/2");
  CHECK(Expression::parse("2*i*t", t).evaluate({Scalar(0)}, 1).coefficient(MultiIndex{1}) == Scalar(0, 2));
  std::vector<std::string> named = {"i"};
  CHECK(Expression::parse("i^2", named).polynomialDegree() == 2);
  CHECK(Expression::parse("3/4", t).constantValue() == Scalar::fraction(3, 4));
}

TEST_CASE("syntax errors carry a location") {
  std::vector<std::string> t = {"t"};
  for (const char* bad : {"t +", "(t", "t ^ t", "u + 1", "exp(t)", "t / t", "t $ 2"}) {
    try {
      Expression::parse(bad, t);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      bool located = std::string(e.what()).find("column") != std::string::npos;
      CHECK_MESSAGE((e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::InvalidArgument), bad);
      if (e.code() == ErrorCode::SyntaxError) CHECK_MESSAGE(located, e.what());
    }
  }
  try {
    Expression::parse("t +\n  * 2", t);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("print then parse is the identity on random trees") {
  corpus::Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    auto names = defaultSourceNames(n);
    Expression e = randomTree(rng, n, 4);
    CHECK_MESSAGE(Expression::parse(e.toString(names), names) == e, e.toString(names));
  }
}

TEST_CASE("builtins must vanish at the base point") {
  std::vector<std::string> t = {"t"};
  auto ok = Expression::parseList("(t, exp1m(t))", t);
  Parametrization phi(t, {"x", "y"}, {Scalar(0)}, ok);
  CHECK(phi.centeredJets(4)[1].coefficient(MultiIndex{2}) == Scalar::fraction(1, 2));
  auto bad = Expression::parseList("(t, exp1m(1 + t))", t);
  CHECK(codeOf([&] { Parametrization(t, {"x", "y"}, {Scalar(0)}, bad); }) == ErrorCode::NonRationalExpansion);
  CHECK(codeOf([&] { Parametrization(t, {"x", "y"}, {Scalar(1)}, ok); }) == ErrorCode::NonRationalExpansion);
}

TEST_CASE("immersion check") {
  std::vector<std::string> t = {"t"};
  auto cusp = Expression::parseList("(t^2, t^3)", t);
  CHECK(codeOf([&] { Parametrization(t, {"x", "y"}, {Scalar(0)}, cusp); }) == ErrorCode::NotAnImmersion);
  Parametrization away(t, {"x", "y"}, {Scalar(1)}, cusp);
  CHECK(away.imagePoint() == std::vector<Scalar>{Scalar(1), Scalar(1)});
}

TEST_CASE("builtin argument of high degree keeps every term") {
  std::vector<std::string> t = {"t"};
  Jet f = Expression::parse("exp1m(t + t^5)", t).evaluate({Scalar(0)}, 6);
  // u = t + t^5: u^6/6! gives 1/720 and u^2/2 gives 1
  CHECK(f.coefficient(MultiIndex{6}) == Scalar::fraction(1, 720) + Scalar(1));
}
