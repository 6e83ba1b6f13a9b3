#include "leastinterp/scalar.hpp"

#include <cctype>
#include <ostream>

#include "leastinterp/errors.hpp"

namespace leastinterp {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "core", "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  if (isZero()) throw Error(ErrorCode::DivisionByZero, "core", "inverse of zero");
  mpq_class n = re_ * re_ + im_ * im_;
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.isZero()) throw Error(ErrorCode::DivisionByZero, "core", "division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::toString() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

namespace {

struct ScalarReader {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, "core",
                "bad scalar '" + std::string(s) + "' at column " + std::to_string(pos + 1) + ": " + why);
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(s.substr(start, pos - start));
  }
  // [sign] (rational ["*i"] | "i"); sets imaginary when the term carries i.
  mpq_class term(bool& imaginary) {
    int sign = 1;
    while (at('+') || at('-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    imaginary = false;
    if (at('i')) {
      ++pos;
      imaginary = true;
      return mpq_class(sign);
    }
    mpz_class num(digits());
    mpz_class den(1);
    if (at('/')) {
      ++pos;
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
    }
    if (at('*')) {
      ++pos;
      if (!at('i')) fail("expected 'i'");
      ++pos;
      imaginary = true;
    }
    mpq_class q(num * sign, den);
    q.canonicalize();
    return q;
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  ScalarReader r{text};
  mpq_class re = 0, im = 0;
  bool seenRe = false, seenIm = false;
  do {
    bool imaginary = false;
    mpq_class v = r.term(imaginary);
    if (imaginary) {
      if (seenIm) r.fail("two imaginary parts");
      seenIm = true;
      im = v;
    } else {
      if (seenRe) r.fail("two real parts");
      seenRe = true;
      re = v;
    }
    r.skip();
  } while (r.pos < text.size() && (text[r.pos] == '+' || text[r.pos] == '-'));
  r.skip();
  if (r.pos != text.size()) r.fail("trailing characters");
  return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.toString(); }

Scalar power(Scalar base, unsigned exponent) {
  Scalar result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace leastinterp
