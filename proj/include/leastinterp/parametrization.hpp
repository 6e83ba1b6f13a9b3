#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leastinterp/expression.hpp"

namespace leastinterp {

// Germ of an embedding C^n, b -> C^m, a given by m expression trees.
class Parametrization {
 public:
  // Throws NonRationalExpansion or NotAnImmersion.
  Parametrization(std::vector<std::string> sourceNames, std::vector<std::string> targetNames,
                  std::vector<Scalar> basePoint, std::vector<Expression> components);

  std::size_t n() const { return base_.size(); }
  std::size_t m() const { return components_.size(); }
  const std::vector<Scalar>& basePoint() const { return base_; }
  const std::vector<Scalar>& imagePoint() const { return image_; }
  const std::vector<Expression>& components() const { return components_; }
  const std::vector<std::string>& sourceNames() const { return sourceNames_; }
  const std::vector<std::string>& targetNames() const { return targetNames_; }

  bool isPolynomial() const;
  // Max component degree; builtins count as the degree of their argument.
  int degreeHint() const;

  // Components minus the image point, known to order K (exact for polynomial components).
  std::vector<Jet> centeredJets(int K) const;

  // Same germ at another base point (components unchanged).
  Parametrization withBasePoint(std::vector<Scalar> base) const;

  std::string toString() const;

 private:
  std::vector<std::string> sourceNames_;
  std::vector<std::string> targetNames_;
  std::vector<Scalar> base_;
  std::vector<Expression> components_;
  std::vector<Scalar> image_;
};

}  // namespace leastinterp
