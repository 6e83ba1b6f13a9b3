#include "leastinterp/invariants.hpp"

#include <cmath>

#include "leastinterp/errors.hpp"

namespace leastinterp {

const char* triStateName(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::NotApplicable: return "not-applicable";
  }
  return "";
}

namespace {

int fullPrefix(const LeastSpace& l) {
  int k = -1;
  while (l.blockDimension(k + 1) == blockSize(l.nvars(), static_cast<std::size_t>(k + 1))) ++k;
  return k;
}

}  // namespace

ZeroEstimateTable zeroEstimateTable(const Parametrization& phi, int dMax, const PullbackOptions& opts) {
  if (dMax < 0) throw Error(ErrorCode::InvalidArgument, "invariants", "degree must be non-negative");
  auto space = polynomialFunctionSpace(phi, dMax, opts);
  ZeroEstimateTable t;
  t.exact = space.exact;
  t.truncation = space.truncation;
  std::size_t n = phi.n(), m = phi.m();
  const auto& gens = space.basis.generators();
  for (int e = 0; e <= dMax; ++e) {
    std::size_t dim = space.dims[static_cast<std::size_t>(e)];
    FunctionSpace prefix(phi.basePoint(), std::vector<Jet>(gens.begin(), gens.begin() + static_cast<long>(dim)));
    auto l = computeLeastSpace(prefix);
    ZeroEstimateRow r;
    r.degree = e;
    r.dim = dim;
    r.hilbert = space.hilbert[static_cast<std::size_t>(e)];
    r.theta = l.maxDegree();
    r.lambda = fullPrefix(l);
    r.dInvariant = isDInvariant(l).invariant;
    r.lowerBound = binomial(n + static_cast<std::size_t>(e), n) + static_cast<std::size_t>(r.theta) -
                   static_cast<std::size_t>(e);
    r.upperBound = binomial(m + static_cast<std::size_t>(e), m);
    r.boundsHold = !r.dInvariant || (r.lowerBound <= dim && dim <= r.upperBound);
    t.rows.push_back(r);
  }

  double num = 0, den = 0;
  for (const auto& r : t.rows) {
    if (r.degree < 2 || r.theta <= 0) continue;
    double le = std::log(static_cast<double>(r.degree));
    num += le * std::log(static_cast<double>(r.theta));
    den += le * le;
  }
  if (den > 0) t.slope = num / den;

  t.linear.aMax = std::max(1, static_cast<int>(n) * phi.degreeHint());
  for (int a = 1; a <= t.linear.aMax && !t.linear.satisfied; ++a)
    for (int b = 0; b <= t.linear.aMax && !t.linear.satisfied; ++b) {
      bool ok = true;
      for (const auto& r : t.rows) ok = ok && r.theta <= a * r.degree + b;
      if (ok) t.linear = {true, a, b, t.linear.aMax};
    }
  return t;
}

PointClassification classifyPoint(const FunctionSpace& z, const SamplingOptions& sampling) {
  PointClassification c;
  c.least = computeLeastSpace(z);
  c.dim = z.dimension();
  c.theta = c.least.maxDegree();
  c.dInvariance = isDInvariant(c.least);
  c.bundleCertificate = isBundlePoint(z, sampling);
  c.bundle = c.bundleCertificate.bundle;
  if (c.bundle && !c.dInvariance.invariant)
    throw Error(ErrorCode::ConsistencyViolation, "invariants", "bundle point with a non-D-invariant least space");
  if (z.nvars() == 1) {
    for (int k = 0; k < c.theta && !c.gapWitness; ++k)
      if (c.least.blockDimension(k) == 0) c.gapWitness = k;
    bool taylorian = !c.gapWitness.has_value();
    c.taylorian = taylorian ? TriState::True : TriState::False;
    if (taylorian != c.bundle || taylorian != c.dInvariance.invariant)
      throw Error(ErrorCode::ConsistencyViolation, "invariants",
                  "bundle, D-invariance and the gap test disagree for a curve");
  }
  return c;
}

}  // namespace leastinterp
