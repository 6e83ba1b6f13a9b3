#pragma once

#include <optional>
#include <vector>

#include "leastinterp/pushforward.hpp"
#include "leastinterp/wronskian.hpp"

namespace leastinterp {

struct ZeroEstimateRow {
  int degree = 0;
  std::size_t dim = 0;   // dim C[Phi]^e
  std::size_t hilbert = 0;  // dim C[Phi]^e - dim C[Phi]^(e-1)
  int theta = 0;         // top degree of the least space
  int lambda = -1;       // largest k with every monomial of degree <= k in the least space
  bool dInvariant = false;
  std::size_t lowerBound = 0;  // binom(n+e, n) + theta - e
  std::size_t upperBound = 0;  // binom(m+e, m)
  bool boundsHold = true;      // checked only at D-invariant points
};

struct LinearBound {
  bool satisfied = false;
  int a = 0;
  int b = 0;
  int aMax = 0;
};

struct ZeroEstimateTable {
  std::vector<ZeroEstimateRow> rows;
  // Least-squares slope of log theta against log e through the origin, rows with e >= 2.
  std::optional<double> slope;
  LinearBound linear;
  bool exact = true;
  int truncation = 0;
};

ZeroEstimateTable zeroEstimateTable(const Parametrization& phi, int dMax, const PullbackOptions& opts = {});

enum class TriState { True, False, NotApplicable };
const char* triStateName(TriState t);

struct PointClassification {
  bool bundle = false;
  BundleCertificate bundleCertificate;
  DInvariance dInvariance;
  TriState taylorian = TriState::NotApplicable;
  // n = 1: smallest degree missing below the top degree of the least space.
  std::optional<int> gapWitness;
  LeastSpace least;
  std::size_t dim = 0;
  int theta = 0;
};

// Throws ConsistencyViolation when bundle fails to imply D-invariance, or, for curves,
// when bundle, D-invariance and the gap test disagree.
PointClassification classifyPoint(const FunctionSpace& z, const SamplingOptions& sampling = {});

}  // namespace leastinterp
