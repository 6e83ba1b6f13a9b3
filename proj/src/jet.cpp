#include "leastinterp/jet.hpp"

#include <algorithm>

#include "leastinterp/errors.hpp"

namespace leastinterp {

bool operator<(const OrderValue& a, const OrderValue& b) {
  if (a.isInfinite()) return false;
  if (b.isInfinite()) return true;
  return a.value() < b.value();
}

Jet::Jet(std::vector<Scalar> base, int order) : base_(std::move(base)), order_(order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "core", "negative truncation order");
  blocks_.resize(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) blocks_[static_cast<std::size_t>(k)].resize(blockSize(base_.size(), static_cast<std::size_t>(k)));
}

Jet Jet::constant(std::vector<Scalar> base, const Scalar& c, int order) {
  Jet j(std::move(base), order);
  j.blocks_[0][0] = c;
  return j;
}

Jet Jet::coordinate(std::vector<Scalar> base, std::size_t i, int order) {
  std::size_t n = base.size();
  Scalar b = base.at(i);
  Jet j(std::move(base), std::max(order, 1));
  j.blocks_[0][0] = b;
  j.at(MultiIndex::unit(n, i)) = Scalar(1);
  return j.truncated(order);
}

Jet Jet::fromShifted(std::vector<Scalar> base, const Poly& p, int order) {
  if (p.nvars() != base.size()) throw Error(ErrorCode::InvalidArgument, "core", "polynomial arity mismatch");
  Jet j(std::move(base), order);
  for (const auto& [nu, c] : p.terms()) {
    if (static_cast<int>(nu.degree()) > order) {
      j.exact_ = false;
      continue;
    }
    j.at(nu) = c;
  }
  return j;
}

Jet Jet::expand(std::vector<Scalar> base, const Poly& p, int order) {
  Poly shifted = p.shifted(base);
  return fromShifted(std::move(base), shifted, order);
}

Scalar& Jet::at(const MultiIndex& nu) { return blocks_[nu.degree()][blockIndex(nu)]; }

const Scalar& Jet::coefficient(const MultiIndex& nu) const {
  static const Scalar zero;
  if (nu.size() != nvars()) throw Error(ErrorCode::InvalidArgument, "core", "multi-index arity mismatch");
  if (static_cast<int>(nu.degree()) > order_) {
    if (exact_) return zero;
    throw Error(ErrorCode::TruncationInsufficient, "core", "coefficient beyond truncation order requested");
  }
  return blocks_[nu.degree()][blockIndex(nu)];
}

bool Jet::isZeroThroughOrder() const { return degree() < 0; }

int Jet::degree() const {
  for (int k = order_; k >= 0; --k)
    for (const auto& c : blocks_[static_cast<std::size_t>(k)])
      if (!c.isZero()) return k;
  return -1;
}

Poly Jet::toShifted() const {
  Poly::Terms terms;
  for (int k = 0; k <= order_; ++k) {
    const auto& monos = monomialsOfDegree(nvars(), static_cast<std::size_t>(k));
    const auto& blk = blocks_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (!blk[i].isZero()) terms.emplace(monos[i], blk[i]);
  }
  return Poly(nvars(), std::move(terms));
}

Jet Jet::truncated(int k) const {
  if (k > order_) {
    if (!exact_)
      throw Error(ErrorCode::TruncationInsufficient, "core",
                  "cannot raise truncation order of an inexact jet from " + std::to_string(order_) + " to " +
                      std::to_string(k));
    return withCapacity(k);
  }
  Jet r(base_, k);
  for (int d = 0; d <= k; ++d) r.blocks_[static_cast<std::size_t>(d)] = blocks_[static_cast<std::size_t>(d)];
  r.exact_ = exact_ && degree() <= k;
  return r;
}

Jet Jet::withCapacity(int k) const {
  if (!exact_) throw Error(ErrorCode::InvalidArgument, "core", "capacity change on an inexact jet");
  if (k <= order_) return truncated(k);
  Jet r(base_, k);
  for (int d = 0; d <= order_; ++d) r.blocks_[static_cast<std::size_t>(d)] = blocks_[static_cast<std::size_t>(d)];
  return r;
}

Jet Jet::markedInexact() const {
  Jet r = *this;
  r.exact_ = false;
  return r;
}

namespace {

void requireCompatible(const Jet& a, const Jet& b) {
  if (a.basePoint() != b.basePoint()) throw Error(ErrorCode::InvalidArgument, "core", "jets at different base points");
}

// Result capacity: exact operands are full polynomials and impose no limit.
int combinedOrder(const Jet& a, const Jet& b) {
  if (a.exact() && b.exact()) return std::max(a.order(), b.order());
  if (a.exact()) return b.order();
  if (b.exact()) return a.order();
  return std::min(a.order(), b.order());
}

}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  requireCompatible(*this, o);
  int k = combinedOrder(*this, o);
  bool ex = exact_ && o.exact_;
  Jet r(base_, k);
  for (int d = 0; d <= k; ++d) {
    auto& out = r.blocks_[static_cast<std::size_t>(d)];
    if (d <= order_) out = blocks_[static_cast<std::size_t>(d)];
    if (d <= o.order_) {
      const auto& src = o.blocks_[static_cast<std::size_t>(d)];
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!src[i].isZero()) out[i] += src[i];
    }
  }
  r.exact_ = ex;
  *this = std::move(r);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) { return *this += -o; }

Jet Jet::operator-() const { return Scalar(-1) * *this; }

Jet operator*(const Scalar& c, Jet a) {
  for (auto& blk : a.blocks_)
    for (auto& x : blk)
      if (!x.isZero()) x *= c;
  return a;
}

Jet operator*(const Jet& a, const Jet& b) {
  requireCompatible(a, b);
  int da = a.degree(), db = b.degree();
  if ((a.exact_ && da < 0) || (b.exact_ && db < 0)) return Jet(a.base_, std::max(a.order_, b.order_));
  int k = combinedOrder(a, b);
  // a product of polynomials stays a polynomial
  if (a.exact_ && b.exact_) k = std::max(k, da + db);
  Jet r(a.base_, k);
  r.exact_ = a.exact_ && b.exact_;
  std::size_t n = a.nvars();
  for (int i = 0; i <= std::min(a.order_, k); ++i) {
    const auto& ba = a.blocks_[static_cast<std::size_t>(i)];
    const auto& ma = monomialsOfDegree(n, static_cast<std::size_t>(i));
    for (std::size_t x = 0; x < ba.size(); ++x) {
      if (ba[x].isZero()) continue;
      for (int j = 0; j <= std::min(b.order_, k - i); ++j) {
        const auto& bb = b.blocks_[static_cast<std::size_t>(j)];
        const auto& mb = monomialsOfDegree(n, static_cast<std::size_t>(j));
        auto& out = r.blocks_[static_cast<std::size_t>(i + j)];
        for (std::size_t y = 0; y < bb.size(); ++y) {
          if (bb[y].isZero()) continue;
          std::size_t idx = n == 1 ? 0 : blockIndex(ma[x] + mb[y]);
          out[idx] += ba[x] * bb[y];
        }
      }
    }
  }
  return r;
}

Jet Jet::pow(unsigned k) const {
  Jet result = constant(base_, Scalar(1), order_);
  Jet base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Jet Jet::derivative(std::size_t i) const {
  if (i >= nvars()) throw Error(ErrorCode::InvalidArgument, "core", "variable index out of range");
  return normalizedDerivative(MultiIndex::unit(nvars(), i));
}

Jet Jet::normalizedDerivative(const MultiIndex& nu) const {
  int shift = static_cast<int>(nu.degree());
  int k = exact_ ? order_ : order_ - shift;
  if (k < 0) throw Error(ErrorCode::TruncationInsufficient, "core", "derivative order exceeds truncation order");
  Jet r(base_, k);
  r.exact_ = exact_;
  for (int d = 0; d + shift <= order_ && d <= k; ++d) {
    const auto& monos = monomialsOfDegree(nvars(), static_cast<std::size_t>(d));
    for (std::size_t x = 0; x < monos.size(); ++x) {
      MultiIndex mu = monos[x] + nu;
      const Scalar& c = blocks_[mu.degree()][blockIndex(mu)];
      if (c.isZero()) continue;
      r.blocks_[static_cast<std::size_t>(d)][x] = c * Scalar(mpq_class(multiBinomial(mu, nu)));
    }
  }
  return r;
}

Jet Jet::recentered(const std::vector<Scalar>& newBase) const {
  if (!exact_) throw Error(ErrorCode::InvalidArgument, "core", "only exact jets can be re-expanded at another point");
  if (newBase.size() != nvars()) throw Error(ErrorCode::InvalidArgument, "core", "base point arity mismatch");
  std::vector<Scalar> delta(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) delta[i] = newBase[i] - base_[i];
  return fromShifted(newBase, toShifted().shifted(delta), order_);
}

Jet Jet::composeSeries(const std::vector<Scalar>& c) const {
  if (!constantTerm().isZero())
    throw Error(ErrorCode::InvalidArgument, "core", "series composition needs a jet without constant term");
  if (exact_ && isZeroThroughOrder()) return *this;
  int top = std::min(order_, static_cast<int>(c.size()) - 1);
  Jet result = constant(base_, top >= 1 ? c[static_cast<std::size_t>(top)] : Scalar(), order_);
  for (int k = top - 1; k >= 1; --k) result = result * *this + constant(base_, c[static_cast<std::size_t>(k)], order_);
  result = result * *this;
  if (result.order_ > order_) result = result.truncated(order_);
  result.exact_ = false;
  return result;
}

bool operator==(const Jet& a, const Jet& b) {
  return a.base_ == b.base_ && a.order_ == b.order_ && a.exact_ == b.exact_ && a.blocks_ == b.blocks_;
}

std::string Jet::toString(const std::vector<std::string>& names) const {
  std::string s = toShifted().toString(names);
  if (!exact_) s += " + O(" + std::to_string(order_ + 1) + ")";
  return s;
}

std::pair<Poly, OrderValue> leastPart(const Jet& f) {
  std::size_t n = f.nvars();
  for (int k = 0; k <= f.order(); ++k) {
    const auto& blk = f.block(k);
    Poly::Terms terms;
    const auto& monos = monomialsOfDegree(n, static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (!blk[i].isZero()) terms.emplace(monos[i], blk[i]);
    if (!terms.empty()) return {Poly(n, std::move(terms)), OrderValue::finite(k)};
  }
  if (!f.exact())
    throw Error(ErrorCode::TruncationAmbiguous, "core",
                "jet vanishes through order " + std::to_string(f.order()) + " but is not known to be zero");
  return {Poly(n), OrderValue::infinity()};
}

OrderValue orderOf(const Jet& f) { return leastPart(f).second; }

namespace {

Jet evaluateOnJets(const Poly& F, const std::vector<Jet>& comps, const std::vector<Scalar>& base, int order) {
  std::vector<std::vector<Jet>> powers(comps.size());
  auto powerOf = [&](std::size_t i, unsigned e) -> const Jet& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Jet::constant(base, Scalar(1), order));
    while (cache.size() <= e) cache.push_back(cache.back() * comps[i]);
    return cache[e];
  };
  Jet result(base, order);
  for (const auto& [nu, c] : F.terms()) {
    Jet term = Jet::constant(base, c, order);
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (nu[i] > 0) term = term * powerOf(i, nu[i]);
    result += term;
  }
  return result;
}

}  // namespace

Jet truncatedCompose(const Poly& F, std::span<const Jet> phi, int K) {
  if (phi.size() != F.nvars()) throw Error(ErrorCode::InvalidArgument, "core", "composition arity mismatch");
  if (phi.empty()) throw Error(ErrorCode::InvalidArgument, "core", "composition needs at least one component");
  const auto& base = phi[0].basePoint();
  bool allExact = true;
  int maxDeg = 0;
  for (const auto& j : phi) {
    if (j.basePoint() != base) throw Error(ErrorCode::InvalidArgument, "core", "components at different base points");
    if (!j.exact()) {
      allExact = false;
      if (j.order() < K)
        throw Error(ErrorCode::TruncationInsufficient, "core",
                    "component truncated at order " + std::to_string(j.order()) + " < " + std::to_string(K));
    }
    maxDeg = std::max(maxDeg, j.degree());
  }
  if (allExact) {
    int cap = std::max(K, std::max(F.degree(), 0) * std::max(maxDeg, 1));
    std::vector<Jet> comps;
    for (const auto& j : phi) comps.push_back(j.withCapacity(cap));
    return evaluateOnJets(F, comps, base, cap).truncated(K);
  }
  std::vector<Jet> comps;
  for (const auto& j : phi) comps.push_back(j.truncated(K));
  return evaluateOnJets(F, comps, base, K);
}

}  // namespace leastinterp
