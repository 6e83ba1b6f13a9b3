#include "leastinterp/parametrization.hpp"

#include <algorithm>

#include "leastinterp/errors.hpp"
#include "leastinterp/linalg.hpp"

namespace leastinterp {

Parametrization::Parametrization(std::vector<std::string> sourceNames, std::vector<std::string> targetNames,
                                 std::vector<Scalar> basePoint, std::vector<Expression> components)
    : sourceNames_(std::move(sourceNames)),
      targetNames_(std::move(targetNames)),
      base_(std::move(basePoint)),
      components_(std::move(components)) {
  if (base_.empty()) throw Error(ErrorCode::InvalidArgument, "pushforward", "source dimension must be positive");
  if (components_.empty()) throw Error(ErrorCode::InvalidArgument, "pushforward", "no components");
  if (sourceNames_.size() != base_.size())
    throw Error(ErrorCode::InvalidArgument, "pushforward", "one source name per coordinate required");
  if (targetNames_.size() != components_.size())
    throw Error(ErrorCode::InvalidArgument, "pushforward", "one target name per component required");
  std::size_t nn = base_.size(), mm = components_.size();
  Matrix jac(mm, nn);
  for (std::size_t j = 0; j < mm; ++j) {
    Jet f = components_[j].evaluate(base_, 1);
    image_.push_back(f.constantTerm());
    for (std::size_t i = 0; i < nn; ++i) jac(j, i) = f.coefficient(MultiIndex::unit(nn, i));
  }
  if (rank(jac) < nn)
    throw Error(ErrorCode::NotAnImmersion, "pushforward",
                "Jacobian has rank " + std::to_string(rank(jac)) + " < " + std::to_string(nn) + " at the base point");
}

bool Parametrization::isPolynomial() const {
  return std::none_of(components_.begin(), components_.end(), [](const Expression& e) { return e.hasBuiltins(); });
}

int Parametrization::degreeHint() const {
  int d = 1;
  for (const auto& c : components_) d = std::max(d, c.degreeHint());
  return d;
}

std::vector<Jet> Parametrization::centeredJets(int K) const {
  std::vector<Jet> out;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const auto& c = components_[j];
    int order = c.hasBuiltins() ? K : std::max(K, c.degreeHint());
    out.push_back(c.evaluate(base_, order) - Jet::constant(base_, image_[j], order));
  }
  return out;
}

Parametrization Parametrization::withBasePoint(std::vector<Scalar> base) const {
  return Parametrization(sourceNames_, targetNames_, std::move(base), components_);
}

std::string Parametrization::toString() const {
  std::string s = "(";
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j) s += ", ";
    s += components_[j].toString(sourceNames_);
  }
  return s + ")";
}

}  // namespace leastinterp
