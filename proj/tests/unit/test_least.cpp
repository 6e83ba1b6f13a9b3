#include <doctest.h>

#include "corpus.hpp"
#include "leastinterp/least.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace leastinterp;
using testutil::codeOf;
using testutil::poly;

namespace {

const std::vector<std::string> st = {"s", "t"};
const std::vector<std::string> dual = {"sigma", "tau"};

FunctionSpace exa1(const std::vector<Scalar>& b) {
  std::vector<Jet> gens;
  for (const char* g : {"1", "s", "t", "t^2 + s*t^2", "t^3"}) gens.push_back(Jet::expand(b, poly(g, st), 3));
  return FunctionSpace(b, gens);
}

}  // namespace

TEST_CASE("least space of the five-generator example") {
  auto l01 = computeLeastSpace(exa1({Scalar(0), Scalar(1)}));
  CHECK(l01.toStrings(dual) == std::vector<std::string>{"1", "sigma", "tau", "sigma*tau", "tau^2"});
  auto l10 = computeLeastSpace(exa1({Scalar(1), Scalar(0)}));
  CHECK(l10.toStrings(dual) == std::vector<std::string>{"1", "sigma", "tau", "tau^2", "tau^3"});
  auto l00 = computeLeastSpace(exa1({Scalar(0), Scalar(0)}));
  CHECK(l00.toStrings(dual) == std::vector<std::string>{"1", "sigma", "tau", "tau^2", "tau^3"});
  // t^2 + s*t^2 vanishes identically along s = -1
  auto lm = computeLeastSpace(exa1({Scalar(-1), Scalar(1)}));
  CHECK(lm.dimension() == 5);
}

TEST_CASE("graded elimination agrees with the Z cap m^k oracle") {
  corpus::Rng rng(11);
  int checked = 0;
  while (checked < 60) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 6));
    auto b = rng.point(n);
    std::vector<Poly> shifted;
    std::vector<Jet> gens;
    for (std::size_t i = 0; i < m; ++i) {
      Poly p = rng.polynomial(n, 4, 4, rng.coin(3));
      shifted.push_back(p);
      gens.push_back(Jet::fromShifted(b, p, 4));
    }
    if (oracle::rankOf([&] {
          oracle::Rows rows;
          auto monos = monomialsUpTo(n, 4);
          for (const auto& p : shifted) {
            std::vector<Scalar> r;
            for (const auto& nu : monos) r.push_back(p.coefficient(nu));
            rows.push_back(r);
          }
          return rows;
        }()) < m) {
      CHECK(codeOf([&] { FunctionSpace(b, gens); }) == ErrorCode::DependentGenerators);
      continue;
    }
    ++checked;
    auto l = computeLeastSpace(FunctionSpace(b, gens));
    CHECK(l == LeastSpace(n, oracle::leastParts(shifted)));
    CHECK(l.dimension() == m);
  }
}

TEST_CASE("inexact generators whose independence is not visible") {
  std::vector<Scalar> b = {Scalar(0)};
  Jet a = Jet::coordinate(b, 0, 2).markedInexact();
  Jet c = (Jet::coordinate(b, 0, 2) + Jet::fromShifted(b, Poly::monomial({3}), 3)).truncated(2);
  CHECK(codeOf([&] { FunctionSpace(b, {a, c}); }) == ErrorCode::TruncationInsufficient);
}

TEST_CASE("D-invariance and its witness") {
  CHECK(isDInvariant(computeLeastSpace(exa1({Scalar(0), Scalar(1)}))).invariant);
  std::vector<Scalar> b = {Scalar(0)};
  std::vector<Jet> gens;
  for (unsigned k : {0u, 1u, 3u}) gens.push_back(Jet::fromShifted(b, Poly::monomial({k}), 3));
  auto d = isDInvariant(computeLeastSpace(FunctionSpace(b, gens)));
  REQUIRE_FALSE(d.invariant);
  REQUIRE(d.witness);
  CHECK(d.witness->element == Poly::monomial({3}));
  CHECK(d.witness->derivative == Poly::monomial({2}, Scalar(3)));
}

TEST_CASE("linear substitution of least spaces") {
  LeastSpace l(2, {poly("1", dual), poly("sigma", dual), poly("tau", dual), poly("sigma^2", dual)});
  Matrix J = Matrix::fromRows({{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}});
  auto m = applyLinearSubstitution(l, J);
  CHECK(m.contains(poly("sigma^2 + 2*sigma*tau + tau^2", dual)));
  CHECK(applyLinearSubstitution(m, inverse(J)) == l);
  CHECK(codeOf([&] { applyLinearSubstitution(l, Matrix(2, 2)); }) == ErrorCode::SingularMatrix);
  CHECK(codeOf([&] { applyLinearSubstitution(l, Matrix::identity(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("dual variable names") {
  CHECK(dualNames({"s", "t"}) == std::vector<std::string>{"sigma", "tau"});
  CHECK(dualNames({"x1", "x2"}) == std::vector<std::string>{"xi1", "xi2"});
  CHECK(dualNames({"u"}) == std::vector<std::string>{"Du"});
}
