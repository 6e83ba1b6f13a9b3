// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "leastinterp/artin.hpp"
#include "leastinterp/config.hpp"
#include "leastinterp/invariants.hpp"
#include "leastinterp/report.hpp"

using namespace leastinterp;

namespace {

struct Check {
  std::ostringstream log;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) log << what;
    ok = ok && cond;
  }
};

Poly parsePoly(const std::string& text, const std::vector<std::string>& names) {
  std::vector<Scalar> zero(names.size());
  auto e = Expression::parse(text, names);
  return e.evaluate(zero, std::max(0, e.degreeHint())).toShifted();
}

FunctionSpace exa1(const std::vector<Scalar>& b) {
  std::vector<std::string> st = {"s", "t"};
  std::vector<Jet> gens;
  for (const char* g : {"1", "s", "t", "t^2 + s*t^2", "t^3"}) gens.push_back(Jet::expand(b, parsePoly(g, st), 3));
  return FunctionSpace(b, gens);
}

std::vector<std::string> strings(const std::vector<Poly>& ps, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.toString(names));
  return out;
}

void criterion1(Check& c) {
  std::vector<std::string> dual = {"sigma", "tau"}, primed = {"s'", "t'"};
  auto z01 = exa1({0, 1});
  auto z00 = exa1({0, 0});
  c.expect(rankProfileAt(z01, 3) == std::vector<std::size_t>{1, 3, 5, 5}, "rank profile at (0,1); ");
  c.expect(rankProfileAt(z00, 3) == std::vector<std::size_t>{1, 3, 4, 5}, "rank profile at (0,0); ");
  std::vector<Scalar> grid = {Scalar(-1), Scalar(0), Scalar::fraction(1, 2)};
  std::vector<Scalar> tgrid = {Scalar::fraction(-1, 2), Scalar(0), Scalar(2)};
  for (const auto& s : grid)
    for (const auto& t : tgrid)
      c.expect(isBundlePoint(exa1({s, t})).bundle == !t.isZero(), "bundle flag at (" + s.toString() + "," + t.toString() + "); ");
  auto l01 = computeLeastSpace(z01);
  LeastSpace expected(2, {parsePoly("1", dual), parsePoly("sigma", dual), parsePoly("tau", dual),
                          parsePoly("sigma*tau", dual), parsePoly("tau^2", dual)});
  c.expect(l01 == expected, "least space at (0,1); ");
  auto a01 = annihilatorBasis(l01);
  c.expect(a01.monomialGenerators &&
               strings(std::vector<Poly>{Poly::monomial({2, 0}), Poly::monomial({1, 2}), Poly::monomial({0, 3})}, primed) ==
                   strings([&] {
                     std::vector<Poly> v;
                     for (const auto& mu : *a01.monomialGenerators) v.push_back(Poly::monomial(mu));
                     return v;
                   }(), primed),
           "annihilator generators at (0,1); ");
  auto a10 = annihilatorBasis(computeLeastSpace(exa1({1, 0})));
  c.expect(a10.monomialGenerators &&
               *a10.monomialGenerators == std::vector<MultiIndex>{MultiIndex{2, 0}, MultiIndex{1, 1}, MultiIndex{0, 4}},
           "annihilator generators at (1,0); ");
}

void criterion2(Check& c) {
  std::vector<std::string> s = {"s1", "s2"}, t = {"t1", "t2"}, xi = {"xi1", "xi2", "xi3"};
  std::vector<std::string> x = {"x1", "x2", "x3"};
  for (const auto& s2 : {Scalar(0), Scalar(1), Scalar::fraction(1, 2)}) {
    std::vector<Scalar> b = {Scalar(0), s2};
    Parametrization phi(s, x, b, Expression::parseList("(s1, s2, s2^2)", s));
    Parametrization psi(t, x, b, Expression::parseList("(t1 + t2, t2, t2^2)", t));
    Poly sigma2 = Poly::variable(2, 1);
    Poly e1 = Poly::variable(3, 1) + (Scalar(2) * s2) * Poly::variable(3, 2);
    Poly e2 = Scalar(2) * Poly::variable(3, 2) + Poly::variable(3, 1).pow(2) +
              (Scalar(4) * s2) * (Poly::variable(3, 1) * Poly::variable(3, 2)) +
              (Scalar(4) * s2 * s2) * Poly::variable(3, 2).pow(2);
    c.expect(adjointPushforward(phi, sigma2) == e1, "push-forward of sigma2 at s2=" + s2.toString() + "; ");
    c.expect(adjointPushforward(phi, sigma2.pow(2)) == e2, "push-forward of sigma2^2 at s2=" + s2.toString() + "; ");
    auto dphi = bosCalviTangents(phi, 1).tangents;
    auto dpsi = bosCalviTangents(psi, 1).tangents;
    MultiIndex xi1sq{2, 0, 0};
    c.expect(monomialAppearsInSpan(dpsi, xi1sq), "xi1^2 missing from psi tangents; ");
    c.expect(!monomialAppearsInSpan(dphi, xi1sq), "xi1^2 present in phi tangents; ");
  }
}

void criterion3(Check& c) {
  std::vector<std::string> s = {"s"}, t = {"t"}, xy = {"x", "y"}, sigma = {"sigma"};
  Parametrization phi(s, xy, {Scalar(0)}, Expression::parseList("(s, s^2 + s^6)", s));
  Parametrization psi(t, xy, {Scalar(0)}, Expression::parseList("(t + t^2, (t + t^2)^2 + (t + t^2)^6)", t));
  auto zphi = polynomialFunctionSpace(phi, 2);
  auto l = computeLeastSpace(zphi.basis);
  c.expect(l.toStrings(sigma) == std::vector<std::string>{"1", "sigma", "sigma^2", "sigma^3", "sigma^4", "sigma^6"},
           "least space of C[Phi]^2; ");
  auto cls = classifyPoint(zphi.basis);
  c.expect(cls.gapWitness == 5 && cls.taylorian == TriState::False, "gap witness; ");

  Poly x5 = Poly::monomial({5, 0});
  auto project = [&](const Parametrization& p) {
    auto z = polynomialFunctionSpace(p, 2);
    Projector proj(z.basis);
    auto pr = taylorProject(proj, pullbackPolynomial(p, x5, z.basis.commonOrder()));
    Poly out(2);
    for (std::size_t i = 0; i < pr.coefficients.size(); ++i) out += Poly::monomial(z.basisMonomials[i], pr.coefficients[i]);
    return out;
  };
  c.expect(project(phi).isZero(), "T_phi(x^5) != 0; ");
  c.expect(project(psi) == Scalar(5) * (Poly::monomial({0, 1}) - Poly::monomial({2, 0})), "T_psi(x^5) != 5(y - x^2); ");
  auto at1 = classifyPoint(polynomialFunctionSpace(phi.withBasePoint({Scalar(1)}), 2).basis);
  c.expect(at1.taylorian == TriState::True, "taylorian at 1; ");
}

void criterion4(Check& c) {
  std::vector<std::string> t = {"t"};
  Parametrization phi(t, {"x", "y"}, {Scalar(0)}, Expression::parseList("(t, exp1m(t))", t));
  auto table = zeroEstimateTable(phi, 5, PullbackOptions{40, true});
  for (int d = 1; d <= 5; ++d) {
    const auto& r = table.rows[static_cast<std::size_t>(d)];
    int full = (d + 1) * (d + 2) / 2;
    c.expect(r.theta == full - 1 && r.dim == static_cast<std::size_t>(full), "theta/dim at d=" + std::to_string(d) + "; ");
  }
  c.expect(table.slope && *table.slope >= 1.8 && *table.slope <= 2.2, "slope out of range; ");
}

void criterion5And6(Check& c5, Check& c6) {
  auto germs = corpus::randomGerms(50, 5);
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const auto& g = germs[i];
    std::string tag = "germ " + std::to_string(i) + " " + g.phi.toString() + ": ";
    auto table = zeroEstimateTable(g.phi, 3);
    for (const auto& r : table.rows) {
      c5.expect(r.lambda >= r.degree, tag + "lambda < e; ");
      if (r.dInvariant)
        c5.expect(r.lowerBound <= r.dim && r.dim <= r.upperBound, tag + "inequality at e=" + std::to_string(r.degree) + "; ");
    }
    for (int d = 1; d <= 2; ++d) {
      try {
        auto cls = classifyPoint(polynomialFunctionSpace(g.phi, d).basis);
        c6.expect(!cls.bundle || cls.dInvariance.invariant, tag + "bundle without D-invariance; ");
      } catch (const Error& e) {
        c6.expect(false, tag + e.what() + "; ");
      }
    }
  }
  std::vector<std::string> st = {"s", "t"};
  Parametrization graph(st, {"x1", "x2", "x3", "x4"}, {Scalar(1), Scalar(0)},
                        Expression::parseList("(s, t, t^2 + s*t^2, t^3)", st));
  auto cls = classifyPoint(polynomialFunctionSpace(graph, 1).basis);
  c6.expect(cls.dInvariance.invariant && !cls.bundle, "graph embedding at (1,0); ");
}

void criterion7(Check& c) {
  corpus::Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
    Poly p = rng.polynomial(n, 3, 4, true);
    Poly F = rng.polynomial(n, 4, 5, true);
    auto b = rng.point(n);
    Jet f = Jet::expand(b, F, 4);
    for (std::size_t i = 0; i < n; ++i)
      c.expect(pairS(Poly::variable(n, i) * p, f) == pairS(p, f.derivative(i)), "adjointness; ");
  }
  int projectors = 0;
  while (projectors < 20) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 5));
    auto b = rng.point(n);
    std::vector<Jet> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(Jet::expand(b, rng.polynomial(n, 3, 3, true), 3));
    std::optional<Projector> P;
    try {
      P.emplace(FunctionSpace(b, gens));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DependentGenerators) continue;
      throw;
    }
    ++projectors;
    for (std::size_t j = 0; j < m; ++j) {
      auto pr = taylorProject(*P, gens[j]);
      for (std::size_t i = 0; i < m; ++i) c.expect(pr.coefficients[i] == Scalar(i == j ? 1 : 0), "retraction; ");
    }
  }
  for (int k = 0; k < 50; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
    auto y = corpus::randomYoung(rng, n, static_cast<std::size_t>(rng.integer(1, 6)));
    auto b = rng.point(n);
    Projector P(corpus::monomialSpace(y, b, rng.invertible(n)));
    Jet f = Jet::expand(b, rng.polynomial(n, 3, 4), 3), g = Jet::expand(b, rng.polynomial(n, 3, 4), 3);
    auto lhs = taylorProject(P, f * g).coefficients;
    auto rhs = taylorProject(P, taylorProject(P, f).reconstituted * taylorProject(P, g).reconstituted).coefficients;
    c.expect(lhs == rhs, "epimorphism; ");
  }
}

void criterion8(Check& c) {
  corpus::Rng rng(8);
  int independent = 0;
  for (int k = 0; k < 100; ++k) {
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<Poly> fs;
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0 && rng.coin(4)) {
        Poly comb(2);
        for (const auto& f : fs) comb += Scalar(rng.integer(-2, 2)) * f;
        fs.push_back(comb);
      } else {
        fs.push_back(rng.polynomial(2, 3, 3));
      }
    }
    auto b = rng.point(2);
    std::vector<Jet> jets;
    for (const auto& f : fs) jets.push_back(Jet::expand(b, f, 3));
    Matrix a(m, 10);
    auto monos = monomialsUpTo(2, 3);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < monos.size(); ++j) a(i, j) = fs[i].coefficient(monos[j]);
    bool rankIndependent = rank(a) == m;
    bool wronskian = false;
    for (const auto& y : enumerateYoungLike(2, m))
      if (!generalizedWronskian(jets, y).isZeroThroughOrder()) {
        wronskian = true;
        break;
      }
    independent += rankIndependent;
    c.expect(rankIndependent == wronskian, "family " + std::to_string(k) + "; ");
  }
  c.expect(independent > 0 && independent < 100, "corpus lacks one of the two cases; ");
}

void criterion9(Check& c) {
  corpus::Rng rng(9);
  auto checkAlgebra = [&](const Projector& P) {
    auto a = buildArtinAlgebra(P);
    std::size_t m = a.dimension;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) c.expect(a.structure[i][j] == a.structure[j][i], "commutativity; ");
    std::vector<std::vector<Scalar>> e(m, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < m; ++i) e[i][i] = Scalar(1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          c.expect(a.multiply(a.multiply(e[i], e[j]), e[k]) == a.multiply(e[i], a.multiply(e[j], e[k])), "associativity; ");
    for (std::size_t j = 0; j < m; ++j) c.expect(a.multiply(a.unit, e[j]) == e[j], "unit law; ");
    c.expect(a.nilpotencyIndex <= a.least.maxDegree() + 1, "nilpotency index; ");
  };
  for (const auto& g : corpus::randomGerms(20, 9))
    for (int d = 1; d <= 2; ++d) {
      Projector P(polynomialFunctionSpace(g.phi, d).basis);
      if (isDInvariant(P.least()).invariant) checkAlgebra(P);
    }
  for (int k = 0; k < 20; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    auto y = corpus::randomYoung(rng, n, static_cast<std::size_t>(rng.integer(1, 7)));
    auto b = rng.point(n);
    Matrix identity = Matrix::identity(n), J = rng.invertible(n);
    Projector PA(corpus::monomialSpace(y, b, identity));
    Projector PB(corpus::monomialSpace(y, b, J));
    checkAlgebra(PA);
    auto A = buildArtinAlgebra(PA), B = buildArtinAlgebra(PB);
    c.expect(compareUnderLinearChange(A, B, J), "linear change " + std::to_string(k) + "; ");
  }
}

void criterion10(Check& c) {
  namespace fs = std::filesystem;
  std::vector<fs::path> cfgs;
  for (const auto& e : fs::directory_iterator(LEASTINTERP_CONFIG_DIR))
    if (e.path().extension() == ".cfg") cfgs.push_back(e.path());
  std::sort(cfgs.begin(), cfgs.end());
  c.expect(!cfgs.empty(), "no configs; ");
  for (const auto& p : cfgs) {
    auto cfg = loadConfig(p.string());
    auto a = runCommand(cfg, "report-all"), b = runCommand(cfg, "report-all");
    c.expect(a.json == b.json, p.filename().string() + " differs; ");
  }
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* title;
    std::function<void(Check&)> run;
  };
  Check c5, c6;
  bool ran56 = false;
  auto both = [&](Check& self, bool five) {
    if (!ran56) {
      criterion5And6(c5, c6);
      ran56 = true;
    }
    const Check& src = five ? c5 : c6;
    self.ok = src.ok;
    self.log << src.log.str();
  };
  std::vector<Item> items = {
      {1, "five-generator surface: rank profiles, bundle grid, least space, annihilators", criterion1},
      {2, "sheared surfaces: push-forwards and xi1^2 support", criterion2},
      {3, "gap curve: least space, gap witness, projections, base 1", criterion3},
      {4, "exp curve theta, dims and slope at K = 40", criterion4},
      {5, "zero-estimate inequalities on 50 random germs", [&](Check& c) { both(c, true); }},
      {6, "bundle implies D-invariant; graph embedding at (1,0)", [&](Check& c) { both(c, false); }},
      {7, "adjointness, retraction, epimorphism", criterion7},
      {8, "Walker equivalence on 100 families", criterion8},
      {9, "Artinian axioms and linear change comparison", criterion9},
      {10, "report-all determinism on shipped configs", criterion10},
  };
  int failed = 0;
  for (auto& item : items) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      item.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %-60s (%.2fs)%s%s\n", item.id, c.ok ? "PASS" : "FAIL", item.title, secs,
                c.ok ? "" : "  ", c.log.str().c_str());
    failed += !c.ok;
  }
  return failed;
}
