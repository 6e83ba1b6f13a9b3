#include <doctest.h>

#include "corpus.hpp"
#include "leastinterp/pairing.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace leastinterp;
using testutil::poly;

TEST_CASE("pairing matches differentiation at the origin") {
  corpus::Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    Poly p = rng.polynomial(n, 3, 4, true), f = rng.polynomial(n, 4, 6, true);
    auto b = rng.point(n);
    CHECK(pairS(p, Jet::fromShifted(b, f, 4)) == oracle::pairing(p, f));
  }
}

TEST_CASE("pairing is linear in p and conjugate-linear in f") {
  std::vector<Scalar> b = {Scalar(0)};
  Poly p = Poly::monomial({2});
  Jet f = Jet::fromShifted(b, Poly::monomial({2}, Scalar(0, 1)), 2);
  CHECK(pairS(p, f) == Scalar(0, -2));
  CHECK(pairS(Scalar(0, 1) * p, f) == Scalar(2));
}

TEST_CASE("projector reproduces the space and kills the annihilator") {
  corpus::Rng rng(22);
  for (int k = 0; k < 20; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
    auto y = corpus::randomYoung(rng, n, static_cast<std::size_t>(rng.integer(1, 6)));
    auto b = rng.point(n);
    Projector P(corpus::monomialSpace(y, b, rng.invertible(n)));
    for (std::size_t j = 0; j < P.space().dimension(); ++j)
      CHECK(taylorProject(P, P.space().generators()[j]).reconstituted.toShifted() ==
            P.space().generators()[j].toShifted());
    auto ann = annihilatorBasis(P.least());
    for (const auto& h : ann.perDegree)
      for (const auto& q : h) {
        auto pr = taylorProject(P, Jet::fromShifted(b, q, q.degree()));
        for (const auto& c : pr.coefficients) CHECK(c.isZero());
      }
  }
}

TEST_CASE("annihilators and border monomials") {
  std::vector<std::string> dual = {"sigma", "tau"};
  LeastSpace l(2, {poly("1", dual), poly("sigma", dual), poly("tau", dual), poly("sigma*tau", dual), poly("tau^2", dual)});
  auto a = annihilatorBasis(l);
  REQUIRE(a.monomialGenerators);
  CHECK(*a.monomialGenerators == std::vector<MultiIndex>{MultiIndex{2, 0}, MultiIndex{1, 2}, MultiIndex{0, 3}});
  CHECK(annihilatorClosedUnderMultiplication(l, a));
  LeastSpace gap(1, {Poly::monomial({0}), Poly::monomial({1}), Poly::monomial({3})});
  auto g = annihilatorBasis(gap);
  CHECK(g.perDegree[2] == std::vector<Poly>{Poly::monomial({2})});
  CHECK_FALSE(annihilatorClosedUnderMultiplication(gap, g));
}
