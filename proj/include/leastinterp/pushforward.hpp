#pragma once

#include <optional>
#include <vector>

#include "leastinterp/least.hpp"
#include "leastinterp/parametrization.hpp"

namespace leastinterp {

// F(a + x'): rewrite a polynomial given in absolute target coordinates in coordinates centered at a.
Poly recenterPolynomial(const Poly& F, const std::vector<Scalar>& a);

// F is in centered target coordinates x' = x - a; returns F(Phi - a) at b to order K.
Jet pullbackPolynomial(const Parametrization& phi, const Poly& F, int K);

// sum_mu c_mu xi^mu with c_mu = S_n(p, (Phi - a)^mu) / mu!.
Poly adjointPushforward(const Parametrization& phi, const Poly& p);

struct PolynomialFunctionSpace {
  int degree = 0;
  FunctionSpace basis;                    // pullbacks of the centered monomials below
  std::vector<MultiIndex> basisMonomials;  // exponents alpha of (x - a)^alpha, in GradedOrder
  std::vector<std::size_t> dims;           // dim C[Phi]^e, e = 0..degree
  std::vector<std::size_t> hilbert;        // dims[e] - dims[e-1]
  bool exact = true;
  int truncation = 0;
  bool stabilityChecked = false;
};

struct PullbackOptions {
  std::optional<int> truncation;  // ignored for polynomial parametrizations
  bool stabilityCheck = true;
};

int defaultTruncation(const Parametrization& phi, int d);

PolynomialFunctionSpace polynomialFunctionSpace(const Parametrization& phi, int d, const PullbackOptions& opts = {});

struct BosCalviTangentSet {
  int degree = 0;
  std::vector<Poly> tangents;
  LeastSpace sourceLeast;
};

BosCalviTangentSet bosCalviTangents(const Parametrization& phi, int d, const PullbackOptions& opts = {});

bool spanContains(const std::vector<Poly>& generators, const Poly& p);
// Some element of the span has a nonzero coefficient at mu.
bool monomialAppearsInSpan(const std::vector<Poly>& generators, const MultiIndex& mu);

}  // namespace leastinterp
