#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leastinterp/pairing.hpp"

namespace leastinterp {

// Z with the product z * z' = T(z z'), in coordinates over the generators of Z.
struct ArtinAlgebra {
  std::size_t dimension = 0;
  std::vector<std::string> basisLabels;
  // structure[i][j][l]: coefficient of g_l in T(g_i g_j).
  std::vector<std::vector<std::vector<Scalar>>> structure;
  std::vector<Scalar> unit;
  std::optional<std::size_t> unitIndex;
  // Smallest k with M^k = 0 for the maximal ideal M = {z : z(b) = 0}.
  int nilpotencyIndex = 0;
  LeastSpace least;

  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
};

// Throws NotDInvariant when the least space is not closed under differentiation, and
// ConsistencyViolation when an algebra axiom fails.
ArtinAlgebra buildArtinAlgebra(const Projector& p, std::vector<std::string> labels = {});

// True iff A's annihilator, pushed through t -> J^{-H} t, agrees with B's in every degree.
bool compareUnderLinearChange(const ArtinAlgebra& a, const ArtinAlgebra& b, const Matrix& J);

}  // namespace leastinterp
