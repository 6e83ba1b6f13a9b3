#include <doctest.h>

#include "corpus.hpp"
#include "leastinterp/wronskian.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace leastinterp;
using testutil::codeOf;
using testutil::poly;

TEST_CASE("Young-like sets are counted by partitions and plane partitions") {
  std::vector<std::size_t> partitions = {1, 2, 3, 5, 7, 11, 15};
  for (std::size_t m = 1; m <= 7; ++m) CHECK(enumerateYoungLike(2, m).size() == partitions[m - 1]);
  std::vector<std::size_t> plane = {1, 3, 6, 13, 24, 48};
  for (std::size_t m = 1; m <= 6; ++m) CHECK(enumerateYoungLike(3, m).size() == plane[m - 1]);
  for (const auto& y : enumerateYoungLike(3, 5)) CHECK(isDownwardClosed(y.indices()));
  CHECK(codeOf([] { enumerateYoungLike(3, 30, 1000); }) == ErrorCode::CombinatorialBlowup);
  CHECK(codeOf([] { YoungLikeSet({MultiIndex{1, 0}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("generalized Wronskian equals the Leibniz expansion") {
  corpus::Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    auto b = rng.point(n);
    std::vector<Poly> fs;
    std::vector<Jet> jets;
    for (std::size_t i = 0; i < m; ++i) {
      fs.push_back(rng.polynomial(n, 3, 3));
      jets.push_back(Jet::fromShifted(b, fs.back(), 3));
    }
    auto y = corpus::randomYoung(rng, n, m);
    CHECK(generalizedWronskian(jets, y).toShifted() == oracle::wronskian(fs, y.indices()));
    std::vector<Scalar> origin(n);
    CHECK(wronskianAtBase(jets, y) == oracle::wronskian(fs, y.indices()).evaluate(origin));
  }
}

TEST_CASE("jet rank profiles of the five-generator example") {
  std::vector<std::string> st = {"s", "t"};
  auto space = [&](Scalar s, Scalar t) {
    std::vector<Scalar> b = {s, t};
    std::vector<Jet> gens;
    for (const char* g : {"1", "s", "t", "t^2 + s*t^2", "t^3"}) gens.push_back(Jet::expand(b, poly(g, st), 3));
    return FunctionSpace(b, gens);
  };
  CHECK(rankProfileAt(space(0, 1), 3) == std::vector<std::size_t>{1, 3, 5, 5});
  CHECK(rankProfileAt(space(0, 0), 3) == std::vector<std::size_t>{1, 3, 4, 5});
  auto yes = isBundlePoint(space(2, 1));
  CHECK(yes.bundle);
  REQUIRE(yes.witness);
  CHECK_FALSE(wronskianAtBase(space(2, 1).generators(), *yes.witness).isZero());
  auto no = isBundlePoint(space(1, 0));
  CHECK_FALSE(no.bundle);
  CHECK(no.firstDeficientOrder == 2);
  CHECK(no.profile.source == GenericRankSource::Sampled);
  CHECK(no.profile.proved[2]);
}

TEST_CASE("generic ranks for curves and for series") {
  std::vector<std::string> t = {"t"};
  std::vector<Scalar> b = {Scalar(0)};
  std::vector<Jet> gens = {Jet::constant(b, 1, 4), Jet::coordinate(b, 0, 4), Jet::fromShifted(b, Poly::monomial({3}), 4)};
  auto p = jetRankProfile(FunctionSpace(b, gens), 2);
  CHECK(p.source == GenericRankSource::OneVariable);
  CHECK(p.genericRanks == std::vector<std::size_t>{1, 2, 3});
  CHECK(p.ranks == std::vector<std::size_t>{1, 2, 2});

  std::vector<std::string> st = {"s", "t"};
  std::vector<Scalar> b2 = {Scalar(0), Scalar(0)};
  std::vector<Jet> series;
  for (const char* g : {"1", "s", "t", "exp1m(s*t)"}) series.push_back(Expression::parse(g, st).evaluate(b2, 8));
  auto q = jetRankProfile(FunctionSpace(b2, series), 3, SamplingOptions{5, 3});
  CHECK(q.source == GenericRankSource::LineRestriction);
  CHECK(q.verifiedUpTo.has_value());
  CHECK(q.genericRanks.back() == 4);
  CHECK(q.ranks == std::vector<std::size_t>{1, 3, 4, 4});
}

TEST_CASE("sampler is reproducible") {
  ScalarSampler a(99), b(99);
  for (int k = 0; k < 20; ++k) CHECK(a.gaussian(5, 5) == b.gaussian(5, 5));
}
