#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace leastinterp {

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
  explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  unsigned degree() const;
  mpz_class factorial() const;
  // Componentwise order: *this <= other.
  bool dividesInto(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& o) const;
  // Requires o <= *this componentwise.
  MultiIndex operator-(const MultiIndex& o) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

  // "(1,0,2)"
  std::string toString() const;

 private:
  std::vector<unsigned> e_;
};

// Canonical order used everywhere: total degree ascending, and within one
// degree lexicographically descending, so x1^k comes first and xn^k last.
// Degree blocks of jets are stored in exactly this order.
struct GradedOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

std::size_t binomial(std::size_t n, std::size_t k);
mpz_class binomialBig(unsigned long n, unsigned long k);

// Number of monomials of degree k in n variables.
std::size_t blockSize(std::size_t n, std::size_t k);
// Position of nu inside its degree block.
std::size_t blockIndex(const MultiIndex& nu);
// All monomials of degree k in n variables, in block order.
const std::vector<MultiIndex>& monomialsOfDegree(std::size_t n, std::size_t k);
// All monomials of degree <= k, in GradedOrder.
std::vector<MultiIndex> monomialsUpTo(std::size_t n, std::size_t k);

// Product of binomial(mu_i, nu_i).
mpz_class multiBinomial(const MultiIndex& mu, const MultiIndex& nu);

}  // namespace leastinterp
