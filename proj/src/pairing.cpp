#include "leastinterp/pairing.hpp"

#include <algorithm>
#include <set>

#include "leastinterp/errors.hpp"

namespace leastinterp {

Scalar pairS(const Poly& p, const Jet& f) {
  if (p.nvars() != f.nvars()) throw Error(ErrorCode::InvalidArgument, "pairing", "variable count mismatch");
  Scalar sum;
  for (const auto& [nu, a] : p.terms()) {
    if (static_cast<int>(nu.degree()) > f.order()) {
      if (f.exact()) continue;
      throw Error(ErrorCode::TruncationInsufficient, "pairing",
                  "pairing degree " + std::to_string(nu.degree()) + " exceeds jet order " + std::to_string(f.order()));
    }
    const Scalar& b = f.coefficient(nu);
    if (b.isZero()) continue;
    sum += Scalar(mpq_class(nu.factorial())) * a * b.conj();
  }
  return sum;
}

Projector::Projector(FunctionSpace z) : space_(std::move(z)) {
  least_ = computeLeastSpace(space_);
  leastBasis_ = least_.basis();
  std::size_t m = space_.dimension();
  gram_ = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram_(i, j) = pairS(leastBasis_[i], space_.generators()[j]);
  try {
    gramInverse_ = inverse(gram_);
  } catch (const Error&) {
    throw Error(ErrorCode::ConsistencyViolation, "pairing", "Gram matrix of the projector is singular");
  }
}

Jet reconstitute(const Projector& p, const std::vector<Scalar>& coefficients) {
  const auto& gens = p.space().generators();
  Jet out(p.space().basePoint(), 0);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (!coefficients[j].isZero()) out += coefficients[j] * gens[j];
  if (out.exact() && out.order() < p.space().commonOrder()) out = out.withCapacity(p.space().commonOrder());
  return out;
}

Projection taylorProject(const Projector& p, const Jet& f) {
  std::size_t m = p.leastBasis().size();
  std::vector<Scalar> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = pairS(p.leastBasis()[i], f);
  std::vector<Scalar> c(m);
  for (std::size_t i = 0; i < m; ++i) {
    Scalar x;
    for (std::size_t k = 0; k < m; ++k)
      if (!r[k].isZero()) x += p.gramInverse()(i, k) * r[k];
    c[i] = x.conj();
  }
  return {c, reconstitute(p, c)};
}

namespace {

std::vector<MultiIndex> borderMonomials(const LeastSpace& l) {
  std::size_t n = l.nvars();
  auto stairs = l.staircase();
  std::set<MultiIndex, GradedOrder> in(stairs.begin(), stairs.end());
  std::set<MultiIndex, GradedOrder> candidates;
  candidates.insert(MultiIndex(n));
  for (const auto& nu : stairs)
    for (std::size_t i = 0; i < n; ++i) candidates.insert(nu + MultiIndex::unit(n, i));
  std::vector<MultiIndex> out;
  for (const auto& mu : candidates) {
    if (in.count(mu)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (mu[i] == 0) continue;
      MultiIndex below = mu;
      below[i] -= 1;
      if (!in.count(below)) minimal = false;
    }
    if (minimal) out.push_back(mu);
  }
  return out;
}

}  // namespace

AnnihilatorBasis annihilatorBasis(const LeastSpace& l, int D) {
  if (D < 0) D = l.maxDegree() + 1;
  if (D < l.maxDegree())
    throw Error(ErrorCode::InvalidArgument, "pairing", "degree bound below the top degree of the least space");
  std::size_t n = l.nvars();
  AnnihilatorBasis out;
  out.degreeBound = D;
  for (int k = 0; k <= D; ++k) {
    const auto& monos = monomialsOfDegree(n, static_cast<std::size_t>(k));
    std::vector<Poly> kernel;
    const auto* blk = l.blockOfDegree(k);
    if (!blk) {
      for (const auto& mu : monos) kernel.push_back(Poly::monomial(mu));
    } else {
      const Matrix& q = blk->basis.reduced;
      Matrix pairing(q.rows(), q.cols());
      for (std::size_t r = 0; r < q.rows(); ++r)
        for (std::size_t c = 0; c < q.cols(); ++c)
          if (!q(r, c).isZero()) pairing(r, c) = Scalar(mpq_class(monos[c].factorial())) * q(r, c).conj();
      Matrix ker = nullspace(pairing);
      for (std::size_t r = 0; r < ker.rows(); ++r) kernel.push_back(polyFromBlock(n, k, ker.row(r)));
    }
    out.perDegree.push_back(std::move(kernel));
  }
  if (l.isMonomial()) out.monomialGenerators = borderMonomials(l);
  return out;
}

bool annihilatorClosedUnderMultiplication(const LeastSpace& l, const AnnihilatorBasis& a) {
  std::size_t n = l.nvars();
  for (int k = 0; k < a.degreeBound; ++k) {
    const auto* blk = l.blockOfDegree(k + 1);
    if (!blk) continue;
    for (const auto& h : a.perDegree[static_cast<std::size_t>(k)]) {
      for (std::size_t i = 0; i < n; ++i) {
        Poly th = Poly::variable(n, i) * h;
        Jet f = Jet::fromShifted(std::vector<Scalar>(n), th, k + 1);
        for (std::size_t r = 0; r < blk->basis.reduced.rows(); ++r) {
          Poly q = polyFromBlock(n, k + 1, blk->basis.reduced.row(r));
          if (!pairS(q, f).isZero()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace leastinterp
