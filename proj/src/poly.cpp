#include "leastinterp/poly.hpp"

#include "leastinterp/errors.hpp"
#include "leastinterp/linalg.hpp"

namespace leastinterp {

Poly::Poly(std::size_t nvars, Terms terms) : nvars_(nvars) {
  for (auto& [nu, c] : terms) {
    if (nu.size() != nvars) throw Error(ErrorCode::InvalidArgument, "core", "monomial arity mismatch");
    if (!c.isZero()) terms_.emplace(nu, c);
  }
}

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
  Poly p(nvars);
  p.add(MultiIndex(nvars), c);
  return p;
}

Poly Poly::monomial(const MultiIndex& nu, const Scalar& c) {
  Poly p(nu.size());
  p.add(nu, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) { return monomial(MultiIndex::unit(nvars, i)); }

void Poly::add(const MultiIndex& nu, const Scalar& c) {
  if (c.isZero()) return;
  auto it = terms_.find(nu);
  if (it == terms_.end()) {
    terms_.emplace(nu, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

int Poly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

int Poly::lowDegree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

bool Poly::isHomogeneous() const { return degree() == lowDegree(); }

Scalar Poly::coefficient(const MultiIndex& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Scalar() : it->second;
}

Poly Poly::homogeneousPart(int k) const {
  Poly r(nvars_);
  for (const auto& [nu, c] : terms_)
    if (static_cast<int>(nu.degree()) == k) r.terms_.emplace(nu, c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::InvalidArgument, "core", "variable count mismatch");
  for (const auto& [nu, c] : o.terms_) add(nu, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::InvalidArgument, "core", "variable count mismatch");
  for (const auto& [nu, c] : o.terms_) add(nu, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::InvalidArgument, "core", "variable count mismatch");
  Poly r(a.nvars_);
  for (const auto& [na, ca] : a.terms_)
    for (const auto& [nb, cb] : b.terms_) r.add(na + nb, ca * cb);
  return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
  Poly r(p.nvars_);
  if (c.isZero()) return r;
  for (const auto& [nu, v] : p.terms_) r.terms_.emplace(nu, c * v);
  return r;
}

Poly Poly::operator-() const { return Scalar(-1) * *this; }

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, Scalar(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::conj() const {
  Poly r(nvars_);
  for (const auto& [nu, c] : terms_) r.terms_.emplace(nu, c.conj());
  return r;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "core", "point arity mismatch");
  Scalar sum;
  for (const auto& [nu, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i) term *= power(point[i], nu[i]);
    sum += term;
  }
  return sum;
}

namespace {

// Substitute x_i := images[i] in p, caching powers of each image.
Poly substitute(const Poly& p, const std::vector<Poly>& images, std::size_t targetVars) {
  std::vector<std::vector<Poly>> powers(images.size());
  auto powerOf = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(targetVars, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly r(targetVars);
  for (const auto& [nu, c] : p.terms()) {
    Poly term = Poly::constant(targetVars, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (nu[i] > 0) term = term * powerOf(i, nu[i]);
    r += term;
  }
  return r;
}

}  // namespace

Poly Poly::shifted(const std::vector<Scalar>& c) const {
  if (c.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "core", "shift arity mismatch");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < nvars_; ++i) images.push_back(variable(nvars_, i) + constant(nvars_, c[i]));
  return substitute(*this, images, nvars_);
}

Poly Poly::substituteLinear(const Matrix& J) const {
  if (J.rows() != nvars_) throw Error(ErrorCode::InvalidArgument, "core", "substitution matrix has wrong size");
  std::size_t target = J.cols();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < nvars_; ++i) {
    Poly li(target);
    for (std::size_t j = 0; j < target; ++j) li += Poly::monomial(MultiIndex::unit(target, j), J(i, j));
    images.push_back(li);
  }
  return substitute(*this, images, target);
}

namespace {

std::string monomialText(const MultiIndex& nu, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (nu[i] > 1) s += "^" + std::to_string(nu[i]);
  }
  return s;
}

}  // namespace

std::string Poly::toString(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "core", "wrong number of variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [nu, c] : terms_) {
    Scalar coef = c;
    bool negative = c.isReal() && sgn(c.re()) < 0;
    if (!first) {
      out += negative ? " - " : " + ";
      if (negative) coef = -coef;
    }
    std::string mono = monomialText(nu, names);
    std::string cs = coef.toString();
    if (!coef.isReal() && !mono.empty()) cs = "(" + cs + ")";
    if (mono.empty()) {
      out += cs;
    } else if (coef.isOne()) {
      out += mono;
    } else if (coef == Scalar(-1)) {
      out += "-" + mono;
    } else {
      out += cs + "*" + mono;
    }
    first = false;
  }
  return out;
}

Poly partialDerivative(const Poly& p, std::size_t i) {
  if (i >= p.nvars()) throw Error(ErrorCode::InvalidArgument, "core", "variable index out of range");
  Poly::Terms out;
  for (const auto& [nu, c] : p.terms()) {
    if (nu[i] == 0) continue;
    MultiIndex mu = nu;
    mu[i] -= 1;
    out.emplace(mu, c * Scalar(static_cast<long>(nu[i])));
  }
  return Poly(p.nvars(), std::move(out));
}

std::vector<Scalar> blockCoefficients(const Poly& p, int k) {
  std::vector<Scalar> v(blockSize(p.nvars(), static_cast<std::size_t>(k)));
  for (const auto& [nu, c] : p.terms())
    if (static_cast<int>(nu.degree()) == k) v[blockIndex(nu)] = c;
  return v;
}

Poly polyFromBlock(std::size_t nvars, int k, const std::vector<Scalar>& coefficients) {
  const auto& monos = monomialsOfDegree(nvars, static_cast<std::size_t>(k));
  Poly::Terms terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (!coefficients[i].isZero()) terms.emplace(monos[i], coefficients[i]);
  return Poly(nvars, std::move(terms));
}

std::vector<std::string> indexedNames(const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

}  // namespace leastinterp
