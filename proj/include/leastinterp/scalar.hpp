#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace leastinterp {

// Exact Gaussian rational re + im*i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);
  static Scalar fraction(long num, long den);
  static Scalar imaginaryUnit() { return Scalar(0, 1); }

  // Accepts "p", "p/q", "p/q+r/s*i", "r/s*i", "-i" and similar.
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }
  bool isOne() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "p/q" for reals, "p/q+r/s*i" otherwise; integers print without "/1".
  std::string toString() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar power(Scalar base, unsigned exponent);

}  // namespace leastinterp
