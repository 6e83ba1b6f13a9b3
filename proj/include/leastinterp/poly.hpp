#pragma once

#include <map>
#include <string>
#include <vector>

#include "leastinterp/multi_index.hpp"
#include "leastinterp/scalar.hpp"

namespace leastinterp {

class Matrix;

// Sparse polynomial; zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<MultiIndex, Scalar, GradedOrder>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, Terms terms);

  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly monomial(const MultiIndex& nu, const Scalar& c = Scalar(1));
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  // Lowest degree present, -1 for zero.
  int lowDegree() const;
  bool isHomogeneous() const;
  Scalar coefficient(const MultiIndex& nu) const;
  Poly homogeneousPart(int k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p);
  Poly operator-() const;
  Poly pow(unsigned k) const;

  Poly conj() const;
  // Evaluate at a point.
  Scalar evaluate(const std::vector<Scalar>& point) const;
  // p(x) -> p(x + c).
  Poly shifted(const std::vector<Scalar>& c) const;
  // p(tau) -> p(J sigma), i.e. tau_i := sum_j J(i,j) sigma_j.
  Poly substituteLinear(const Matrix& J) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Terms in GradedOrder, e.g. "2*xi3 + xi2^2 + 4*xi2*xi3".
  std::string toString(const std::vector<std::string>& names) const;

 private:
  void add(const MultiIndex& nu, const Scalar& c);

  std::size_t nvars_ = 0;
  Terms terms_;
};

Poly partialDerivative(const Poly& p, std::size_t i);

// Coefficients of the degree-k part of p, indexed by monomialsOfDegree(n, k).
std::vector<Scalar> blockCoefficients(const Poly& p, int k);
Poly polyFromBlock(std::size_t nvars, int k, const std::vector<Scalar>& coefficients);

// Default names: "t" style letters are left to callers; this gives x1..xn.
std::vector<std::string> indexedNames(const std::string& stem, std::size_t n);

}  // namespace leastinterp
