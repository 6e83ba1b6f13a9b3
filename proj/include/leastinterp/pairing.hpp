#pragma once

#include <optional>
#include <vector>

#include "leastinterp/least.hpp"

namespace leastinterp {

// S(p, f) = sum nu! a_nu conj(b_nu); linear in p, conjugate-linear in f.
Scalar pairS(const Poly& p, const Jet& f);

class Projector {
 public:
  // Computes the least space and the Gram matrix G(i,j) = S(q_i, g_j); G must be invertible.
  explicit Projector(FunctionSpace z);

  const FunctionSpace& space() const { return space_; }
  const LeastSpace& least() const { return least_; }
  const std::vector<Poly>& leastBasis() const { return leastBasis_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gramInverse() const { return gramInverse_; }

 private:
  FunctionSpace space_;
  LeastSpace least_;
  std::vector<Poly> leastBasis_;
  Matrix gram_;
  Matrix gramInverse_;
};

struct Projection {
  std::vector<Scalar> coefficients;  // over the generators of the space
  Jet reconstituted;
};

Projection taylorProject(const Projector& p, const Jet& f);
Jet reconstitute(const Projector& p, const std::vector<Scalar>& coefficients);

struct AnnihilatorBasis {
  int degreeBound = 0;
  // perDegree[k]: homogeneous degree-k polynomials in t' pairing to zero with the least space.
  std::vector<std::vector<Poly>> perDegree;
  // Border monomials, present when the least space is spanned by monomials.
  std::optional<std::vector<MultiIndex>> monomialGenerators;
};

// D < 0 selects maxDegree + 1.
AnnihilatorBasis annihilatorBasis(const LeastSpace& l, int D = -1);

// True iff t'_i h still annihilates l for every listed h of degree < D.
bool annihilatorClosedUnderMultiplication(const LeastSpace& l, const AnnihilatorBasis& a);

}  // namespace leastinterp
