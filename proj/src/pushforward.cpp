#include "leastinterp/pushforward.hpp"

#include <map>
#include <set>

#include "leastinterp/errors.hpp"
#include "leastinterp/pairing.hpp"

namespace leastinterp {

namespace {

// Pullbacks of (x - a)^alpha for all |alpha| <= d, built by repeated multiplication.
std::map<MultiIndex, Jet, GradedOrder> centeredPowers(const std::vector<Jet>& c, const std::vector<Scalar>& base,
                                                      std::size_t m, int d, int K) {
  std::map<MultiIndex, Jet, GradedOrder> out;
  for (const auto& alpha : monomialsUpTo(m, static_cast<std::size_t>(d))) {
    if (alpha.degree() == 0) {
      out.emplace(alpha, Jet::constant(base, Scalar(1), K));
      continue;
    }
    std::size_t i = m;
    while (alpha[i - 1] == 0) --i;
    --i;
    MultiIndex prev = alpha;
    prev[i] -= 1;
    Jet g = out.at(prev) * c[i];
    if (g.order() > K) g = g.truncated(K);
    out.emplace(alpha, std::move(g));
  }
  return out;
}

std::vector<Scalar> flatten(const Jet& f, int K) {
  std::vector<Scalar> v;
  for (int k = 0; k <= K; ++k) {
    if (k <= f.order()) {
      const auto& b = f.block(k);
      v.insert(v.end(), b.begin(), b.end());
    } else {
      v.resize(v.size() + blockSize(f.nvars(), static_cast<std::size_t>(k)));
    }
  }
  return v;
}

struct Reducer {
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows;

  // Returns true and stores the reduced row when v is independent of the stored rows.
  bool insert(std::vector<Scalar> v) {
    for (const auto& [p, r] : rows) {
      if (v[p].isZero()) continue;
      Scalar f = v[p];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!r[j].isZero()) v[j] -= f * r[j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].isZero()) continue;
      Scalar inv = v[j].inverse();
      for (auto& x : v) x *= inv;
      rows.emplace_back(j, std::move(v));
      return true;
    }
    return false;
  }
};

PolynomialFunctionSpace build(const Parametrization& phi, int d, int K, bool exact) {
  PolynomialFunctionSpace out;
  out.degree = d;
  out.exact = exact;
  out.truncation = K;
  auto c = phi.centeredJets(K);
  auto powers = centeredPowers(c, phi.basePoint(), phi.m(), d, K);
  Reducer red;
  std::vector<Jet> gens;
  out.dims.assign(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [alpha, g] : powers) {
    if (red.insert(flatten(g, K))) {
      gens.push_back(g);
      out.basisMonomials.push_back(alpha);
    }
    out.dims[alpha.degree()] = gens.size();
  }
  for (int e = 0; e <= d; ++e)
    out.hilbert.push_back(out.dims[static_cast<std::size_t>(e)] - (e ? out.dims[static_cast<std::size_t>(e - 1)] : 0));
  out.basis = FunctionSpace(phi.basePoint(), std::move(gens));
  return out;
}

}  // namespace

Poly recenterPolynomial(const Poly& F, const std::vector<Scalar>& a) { return F.shifted(a); }

Jet pullbackPolynomial(const Parametrization& phi, const Poly& F, int K) {
  if (F.nvars() != phi.m()) throw Error(ErrorCode::DimensionMismatch, "pushforward", "polynomial has wrong arity");
  auto c = phi.centeredJets(K);
  return truncatedCompose(F, c, K);
}

Poly adjointPushforward(const Parametrization& phi, const Poly& p) {
  if (p.nvars() != phi.n()) throw Error(ErrorCode::DimensionMismatch, "pushforward", "polynomial has wrong arity");
  Poly out(phi.m());
  if (p.isZero()) return out;
  int D = p.degree();
  auto c = phi.centeredJets(D);
  for (auto& j : c)
    if (j.order() > D) j = j.truncated(D);
  auto powers = centeredPowers(c, phi.basePoint(), phi.m(), D, D);
  for (const auto& [mu, g] : powers) {
    Scalar s = pairS(p, g);
    if (s.isZero()) continue;
    out += Poly::monomial(mu, s / Scalar(mpq_class(mu.factorial())));
  }
  return out;
}

int defaultTruncation(const Parametrization& phi, int d) {
  if (phi.isPolynomial()) return d * phi.degreeHint();
  return static_cast<int>(2 * binomial(phi.m() + static_cast<std::size_t>(d), phi.m()));
}

PolynomialFunctionSpace polynomialFunctionSpace(const Parametrization& phi, int d, const PullbackOptions& opts) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "pushforward", "degree must be non-negative");
  if (phi.isPolynomial()) return build(phi, d, std::max(d * phi.degreeHint(), 0), true);
  int K = opts.truncation.value_or(defaultTruncation(phi, d));
  if (K < d) throw Error(ErrorCode::TruncationInsufficient, "pushforward", "truncation below the degree");
  auto out = build(phi, d, K, false);
  if (opts.stabilityCheck) {
    auto check = build(phi, d, 2 * K, false);
    bool same = check.dims == out.dims && check.basisMonomials == out.basisMonomials &&
                computeLeastSpace(check.basis).maxDegree() == computeLeastSpace(out.basis).maxDegree();
    if (!same)
      throw Error(ErrorCode::StabilityCheckFailed, "pushforward",
                  "results at truncation " + std::to_string(K) + " and " + std::to_string(2 * K) + " differ");
    out.stabilityChecked = true;
  }
  return out;
}

BosCalviTangentSet bosCalviTangents(const Parametrization& phi, int d, const PullbackOptions& opts) {
  auto space = polynomialFunctionSpace(phi, d, opts);
  BosCalviTangentSet out;
  out.degree = d;
  out.sourceLeast = computeLeastSpace(space.basis);
  for (const auto& q : out.sourceLeast.basis()) out.tangents.push_back(adjointPushforward(phi, q));
  Reducer red;
  std::set<MultiIndex, GradedOrder> support;
  for (const auto& t : out.tangents)
    for (const auto& [mu, c] : t.terms()) support.insert(mu);
  for (const auto& t : out.tangents) {
    std::vector<Scalar> v;
    for (const auto& mu : support) v.push_back(t.coefficient(mu));
    if (!red.insert(std::move(v)))
      throw Error(ErrorCode::ConsistencyViolation, "pushforward", "tangent polynomials are linearly dependent");
  }
  return out;
}

bool spanContains(const std::vector<Poly>& generators, const Poly& p) {
  std::set<MultiIndex, GradedOrder> support;
  for (const auto& g : generators)
    for (const auto& [mu, c] : g.terms()) support.insert(mu);
  for (const auto& [mu, c] : p.terms())
    if (!support.count(mu)) return false;
  Reducer red;
  auto vec = [&](const Poly& q) {
    std::vector<Scalar> v;
    for (const auto& mu : support) v.push_back(q.coefficient(mu));
    return v;
  };
  for (const auto& g : generators) red.insert(vec(g));
  return !red.insert(vec(p));
}

bool monomialAppearsInSpan(const std::vector<Poly>& generators, const MultiIndex& mu) {
  for (const auto& g : generators)
    if (!g.coefficient(mu).isZero()) return true;
  return false;
}

}  // namespace leastinterp
