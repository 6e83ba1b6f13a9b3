#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leastinterp/poly.hpp"

namespace leastinterp {

class OrderValue {
 public:
  static OrderValue infinity() { return OrderValue(); }
  static OrderValue finite(int k) { return OrderValue(k); }

  bool isInfinite() const { return !value_.has_value(); }
  int value() const { return *value_; }
  std::string toString() const { return isInfinite() ? "Infinity" : std::to_string(*value_); }

  friend bool operator==(const OrderValue&, const OrderValue&) = default;
  friend bool operator<(const OrderValue& a, const OrderValue& b);

 private:
  OrderValue() = default;
  explicit OrderValue(int k) : value_(k) {}
  std::optional<int> value_;
};

// Truncated Taylor expansion at a base point b, in shifted coordinates t' = t - b.
// Coefficients are stored densely, one block per total degree 0..order.
// An exact jet is a full polynomial; for exact jets `order` is just the capacity.
class Jet {
 public:
  Jet() = default;
  // The zero jet, exact.
  Jet(std::vector<Scalar> base, int order);

  static Jet constant(std::vector<Scalar> base, const Scalar& c, int order);
  // t_i = b_i + t'_i
  static Jet coordinate(std::vector<Scalar> base, std::size_t i, int order);
  // p is given in shifted coordinates t'. Exact iff deg p <= order.
  static Jet fromShifted(std::vector<Scalar> base, const Poly& p, int order);
  // p is given in absolute coordinates t and re-expanded at the base point.
  static Jet expand(std::vector<Scalar> base, const Poly& p, int order);

  std::size_t nvars() const { return base_.size(); }
  const std::vector<Scalar>& basePoint() const { return base_; }
  int order() const { return order_; }
  bool exact() const { return exact_; }

  const Scalar& coefficient(const MultiIndex& nu) const;
  const std::vector<Scalar>& block(int k) const { return blocks_[static_cast<std::size_t>(k)]; }
  const Scalar& constantTerm() const { return blocks_[0][0]; }

  // True iff every stored coefficient vanishes.
  bool isZeroThroughOrder() const;
  // Highest degree with a nonzero coefficient, -1 if none.
  int degree() const;
  // The stored terms as a polynomial in t'.
  Poly toShifted() const;

  Jet truncated(int k) const;
  // Raise capacity of an exact jet (no information change).
  Jet withCapacity(int k) const;
  Jet markedInexact() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Scalar& c, Jet a);
  Jet operator-() const;
  Jet pow(unsigned k) const;

  Jet derivative(std::size_t i) const;
  // u_nu f = (1/nu!) d^nu f, again a jet at the same base point.
  Jet normalizedDerivative(const MultiIndex& nu) const;
  // Re-expand an exact jet at another base point.
  Jet recentered(const std::vector<Scalar>& newBase) const;
  // sum_k c_k u^k for a jet u with zero constant term; c[0] is ignored.
  Jet composeSeries(const std::vector<Scalar>& coefficients) const;

  friend bool operator==(const Jet& a, const Jet& b);

  std::string toString(const std::vector<std::string>& names) const;

 private:
  std::vector<Scalar> base_;
  int order_ = 0;
  bool exact_ = true;
  std::vector<std::vector<Scalar>> blocks_;

  void shrinkCapacityToDegree();
  Scalar& at(const MultiIndex& nu);
};

// Lowest nonzero homogeneous component in dual variables, with its degree.
std::pair<Poly, OrderValue> leastPart(const Jet& f);
OrderValue orderOf(const Jet& f);

// F(Phi) mod m^{K+1}; F is evaluated on the full component jets.
Jet truncatedCompose(const Poly& F, std::span<const Jet> phi, int K);

}  // namespace leastinterp
