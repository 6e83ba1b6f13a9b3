#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "test_util.hpp"
#include "leastinterp/errors.hpp"
#include "leastinterp/expression.hpp"
#include "leastinterp/jet.hpp"
#include "leastinterp/linalg.hpp"

using namespace leastinterp;

using testutil::codeOf;

TEST_CASE("scalar text round trip") {
  for (const char* s : {"0", "3", "-7/2", "1/3+2/5*i", "-1/2-3*i", "5*i", "-i", "i"}) {
    Scalar x = Scalar::parse(s);
    CHECK(Scalar::parse(x.toString()) == x);
  }
  CHECK(Scalar::parse("4/2").toString() == "2");
  CHECK(Scalar::parse("1/3+2/5*i").toString() == "1/3+2/5*i");
  CHECK(Scalar::parse("-i") == Scalar(0, -1));
  CHECK(codeOf([] { Scalar::parse("1/0"); }) == ErrorCode::SyntaxError);
  CHECK(codeOf([] { Scalar::parse("abc"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("scalar field axioms on random gaussian rationals") {
  corpus::Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    Scalar a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.isZero()) CHECK(a * a.inverse() == Scalar(1));
  }
  CHECK(codeOf([] { Scalar(0).inverse(); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("graded order and block indexing") {
  const auto& deg2 = monomialsOfDegree(3, 2);
  REQUIRE(deg2.size() == 6);
  CHECK(deg2.front() == MultiIndex{2, 0, 0});
  CHECK(deg2.back() == MultiIndex{0, 0, 2});
  for (std::size_t i = 0; i < deg2.size(); ++i) CHECK(blockIndex(deg2[i]) == i);
  auto upTo = monomialsUpTo(2, 3);
  CHECK(upTo.size() == 10);
  CHECK(std::is_sorted(upTo.begin(), upTo.end(), GradedOrder{}));
  CHECK(binomial(7, 3) == 35);
  CHECK(blockSize(4, 3) == 20);
}

TEST_CASE("polynomial arithmetic and shifts") {
  std::vector<std::string> xy = {"x", "y"};
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = (x + y).pow(2);
  CHECK(p.toString(xy) == "x^2 + 2*x*y + y^2");
  CHECK(p.shifted({Scalar(1), Scalar(0)}).evaluate({Scalar(0), Scalar(0)}) == Scalar(1));
  CHECK(partialDerivative(p, 1) == Scalar(2) * x + Scalar(2) * y);
  Matrix swap = Matrix::fromRows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
  CHECK((x * y.pow(2)).substituteLinear(swap) == y * x.pow(2));
  CHECK(Poly(2).degree() == -1);
}

TEST_CASE("exact linear algebra") {
  Matrix a = Matrix::fromRows({{Scalar(1), Scalar(2), Scalar(3)}, {Scalar(2), Scalar(4), Scalar(6)}, {Scalar(1), Scalar(0), Scalar(1)}});
  CHECK(rank(a) == 2);
  CHECK(determinant(a).isZero());
  Matrix k = nullspace(a);
  REQUIRE(k.rows() == 1);
  std::vector<Scalar> v = k.row(0);
  for (std::size_t r = 0; r < 3; ++r) {
    Scalar s;
    for (std::size_t c = 0; c < 3; ++c) s += a(r, c) * v[c];
    CHECK(s.isZero());
  }
  CHECK(codeOf([&] { inverse(a); }) == ErrorCode::SingularMatrix);
  corpus::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    Matrix j = rng.invertible(3);
    CHECK(j * inverse(j) == Matrix::identity(3));
  }
}

TEST_CASE("jet arithmetic keeps exactness honest") {
  std::vector<Scalar> b = {Scalar(1)};
  Jet t = Jet::coordinate(b, 0, 3);
  Jet sq = t * t;
  CHECK(sq.exact());
  CHECK(sq.coefficient(MultiIndex{0}) == Scalar(1));
  CHECK(sq.coefficient(MultiIndex{1}) == Scalar(2));
  CHECK(sq.coefficient(MultiIndex{5}).isZero());
  Jet lossy = sq.truncated(1);
  CHECK_FALSE(lossy.exact());
  CHECK(codeOf([&] { lossy.coefficient(MultiIndex{2}); }) == ErrorCode::TruncationInsufficient);
  CHECK(codeOf([&] { lossy.truncated(3); }) == ErrorCode::TruncationInsufficient);
  CHECK((lossy * sq).order() == 1);
}

TEST_CASE("least part and order") {
  std::vector<Scalar> b = {Scalar(0), Scalar(0)};
  Jet f = Jet::fromShifted(b, Poly::monomial({1, 2}) + Poly::monomial({0, 3}, Scalar(2)) + Poly::monomial({4, 0}), 4);
  auto [lp, ord] = leastPart(f);
  CHECK(ord == OrderValue::finite(3));
  CHECK(lp == Poly::monomial({1, 2}) + Poly::monomial({0, 3}, Scalar(2)));
  CHECK(orderOf(Jet(b, 3)).isInfinite());
  CHECK(codeOf([&] { leastPart(Jet(b, 3).markedInexact()); }) == ErrorCode::TruncationAmbiguous);
}

TEST_CASE("series composition matches known expansions") {
  std::vector<std::string> t = {"t"};
  Jet e = Expression::parse("exp1m(t)", t).evaluate({Scalar(0)}, 6);
  CHECK_FALSE(e.exact());
  for (unsigned k = 1; k <= 6; ++k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    CHECK(e.coefficient(MultiIndex{k}) == Scalar(mpq_class(1, f)));
  }
  // log(1 + (exp(t) - 1)) = t
  Jet back = e.composeSeries(builtinSeries(Builtin::Log1p, 6));
  CHECK(back.toShifted() == Poly::variable(1, 0));
  // sin^2 + cos^2 = 1 through order 8
  Jet u = Jet::coordinate({Scalar(0)}, 0, 8);
  Jet s = u.composeSeries(builtinSeries(Builtin::SinS, 8));
  Jet c = u.composeSeries(builtinSeries(Builtin::CosM1, 8)) + Jet::constant({Scalar(0)}, Scalar(1), 8);
  CHECK((s * s + c * c).toShifted() == Poly::constant(1, Scalar(1)));
}

TEST_CASE("truncated composition") {
  std::vector<Scalar> b = {Scalar(0)};
  std::vector<Jet> phi = {Jet::coordinate(b, 0, 2), Jet::fromShifted(b, Poly::monomial({2}) + Poly::monomial({6}), 6)};
  Poly F = Poly::monomial({5, 0});
  Jet f = truncatedCompose(F, phi, 3);
  CHECK(f.order() == 3);
  CHECK(f.isZeroThroughOrder());
  Jet g = truncatedCompose(Poly::monomial({0, 1}) - Poly::monomial({2, 0}), phi, 8);
  CHECK(g.exact());
  CHECK(g.toShifted() == Poly::monomial({6}));
  std::vector<Jet> inexact = {Jet::coordinate(b, 0, 2), phi[1].truncated(2)};
  CHECK(codeOf([&] { truncatedCompose(F, inexact, 4); }) == ErrorCode::TruncationInsufficient);
}
