#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leastinterp/jet.hpp"
#include "leastinterp/linalg.hpp"

namespace leastinterp {

// Finite-dimensional space of germs at a base point, given by independent generators.
class FunctionSpace {
 public:
  FunctionSpace() = default;
  // Throws DependentGenerators (exact input) or TruncationInsufficient (independence not visible).
  FunctionSpace(std::vector<Scalar> base, std::vector<Jet> generators);

  const std::vector<Scalar>& basePoint() const { return base_; }
  const std::vector<Jet>& generators() const { return generators_; }
  std::size_t dimension() const { return generators_.size(); }
  std::size_t nvars() const { return base_.size(); }
  bool exact() const { return exact_; }
  // Order up to which every generator is known.
  int commonOrder() const { return order_; }
  // Rows are generators, columns all monomials of degree <= commonOrder in GradedOrder.
  Matrix coefficientMatrix() const;

 private:
  std::vector<Scalar> base_;
  std::vector<Jet> generators_;
  bool exact_ = true;
  int order_ = 0;
};

// Graded subspace of C[tau] stored as one reduced row echelon block per degree.
class LeastSpace {
 public:
  struct Block {
    int degree = 0;
    Echelon basis;  // columns indexed by monomialsOfDegree(n, degree)
  };

  LeastSpace() = default;
  // Every element must be homogeneous; the span is canonicalized.
  LeastSpace(std::size_t nvars, const std::vector<Poly>& homogeneous);

  std::size_t nvars() const { return nvars_; }
  std::size_t dimension() const;
  int maxDegree() const;
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block* blockOfDegree(int k) const;
  std::size_t blockDimension(int k) const;
  // Degree-sorted canonical basis.
  std::vector<Poly> basis() const;
  bool contains(const Poly& p) const;
  bool isMonomial() const;
  // Exponents of the basis monomials; only meaningful when isMonomial().
  std::vector<MultiIndex> staircase() const;
  std::vector<std::string> toStrings(const std::vector<std::string>& names) const;

  friend bool operator==(const LeastSpace& a, const LeastSpace& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Block> blocks_;
};

LeastSpace computeLeastSpace(const FunctionSpace& z);

struct DInvarianceWitness {
  Poly element;
  std::size_t variable = 0;
  Poly derivative;
};

struct DInvariance {
  bool invariant = true;
  std::optional<DInvarianceWitness> witness;
};

DInvariance isDInvariant(const LeastSpace& l);

LeastSpace applyLinearSubstitution(const LeastSpace& l, const Matrix& J);

// Dual variable names for source coordinates: s -> sigma, t -> tau, otherwise tau1..taun.
std::vector<std::string> dualNames(const std::vector<std::string>& sourceNames);

}  // namespace leastinterp
