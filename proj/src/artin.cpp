#include "leastinterp/artin.hpp"

#include "leastinterp/errors.hpp"

namespace leastinterp {

namespace {

void fail(const std::string& what) { throw Error(ErrorCode::ConsistencyViolation, "artin", what); }

// Row-reduced basis of the span of the given vectors.
std::vector<std::vector<Scalar>> spanBasis(const std::vector<std::vector<Scalar>>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  Matrix m(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
  auto e = rref(m);
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

}  // namespace

std::vector<Scalar> ArtinAlgebra::multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  std::vector<Scalar> out(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < dimension; ++j) {
      if (y[j].isZero()) continue;
      Scalar f = x[i] * y[j];
      const auto& s = structure[i][j];
      for (std::size_t l = 0; l < dimension; ++l)
        if (!s[l].isZero()) out[l] += f * s[l];
    }
  }
  return out;
}

ArtinAlgebra buildArtinAlgebra(const Projector& p, std::vector<std::string> labels) {
  auto dinv = isDInvariant(p.least());
  if (!dinv.invariant)
    throw Error(ErrorCode::NotDInvariant, "artin", "least space is not closed under differentiation");
  const auto& gens = p.space().generators();
  std::size_t m = gens.size();
  int theta = p.least().maxDegree();

  ArtinAlgebra a;
  a.dimension = m;
  a.least = p.least();
  if (labels.empty())
    for (std::size_t i = 0; i < m; ++i) labels.push_back("g" + std::to_string(i + 1));
  a.basisLabels = std::move(labels);

  std::vector<Jet> low;
  for (const auto& g : gens) low.push_back(g.order() > theta ? g.truncated(theta) : g);
  a.structure.assign(m, std::vector<std::vector<Scalar>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Jet prod = low[i] * low[j];
      if (prod.order() > theta) prod = prod.truncated(theta);
      a.structure[i][j] = taylorProject(p, prod).coefficients;
      a.structure[j][i] = a.structure[i][j];
    }

  a.unit = taylorProject(p, Jet::constant(p.space().basePoint(), Scalar(1), theta)).coefficients;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (!a.unit[i].isZero()) {
      ++nonzero;
      if (a.unit[i].isOne()) a.unitIndex = i;
    }
  if (nonzero != 1) a.unitIndex.reset();

  std::vector<std::vector<Scalar>> e(m, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < m; ++i) e[i][i] = Scalar(1);
  for (std::size_t j = 0; j < m; ++j)
    if (a.multiply(a.unit, e[j]) != e[j]) fail("unit law fails");
  // With commutativity, (g_i g_j) g_k = g_i (g_j g_k) for all j is C_i C_k = C_k C_i,
  // where row j of C_i holds the coordinates of g_i g_j.
  std::vector<Matrix> mult;
  for (std::size_t i = 0; i < m; ++i) {
    Matrix c(m, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) c(j, l) = a.structure[i][j][l];
    mult.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i + 1; k < m; ++k)
      if (!(mult[i] * mult[k] == mult[k] * mult[i])) fail("associativity fails");

  Matrix ev(1, m);
  for (std::size_t j = 0; j < m; ++j) ev(0, j) = gens[j].constantTerm();
  Matrix ker = nullspace(ev);
  std::vector<std::vector<Scalar>> ideal;
  for (std::size_t i = 0; i < ker.rows(); ++i) ideal.push_back(ker.row(i));
  auto power = spanBasis(ideal, m);
  int k = 1;
  while (!power.empty()) {
    if (k > theta + 1) fail("maximal ideal is not nilpotent");
    std::vector<std::vector<Scalar>> next;
    for (const auto& x : power)
      for (const auto& y : ideal) next.push_back(a.multiply(x, y));
    power = spanBasis(next, m);
    ++k;
  }
  a.nilpotencyIndex = k;
  return a;
}

bool compareUnderLinearChange(const ArtinAlgebra& a, const ArtinAlgebra& b, const Matrix& J) {
  std::size_t n = a.least.nvars();
  if (a.dimension != b.dimension || b.least.nvars() != n || J.rows() != n || J.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "artin", "algebras or change of variables have mismatched sizes");
  Matrix map = inverse(J).conjugateTranspose();
  int D = std::max(a.least.maxDegree(), b.least.maxDegree()) + 1;
  auto annA = annihilatorBasis(a.least, D);
  auto annB = annihilatorBasis(b.least, D);
  for (int k = 0; k <= D; ++k) {
    std::size_t cols = blockSize(n, static_cast<std::size_t>(k));
    const auto& pa = annA.perDegree[static_cast<std::size_t>(k)];
    const auto& pb = annB.perDegree[static_cast<std::size_t>(k)];
    if (pa.size() != pb.size()) return false;
    if (pa.empty()) continue;
    Matrix ma(pa.size(), cols), mb(pb.size(), cols);
    for (std::size_t i = 0; i < pa.size(); ++i) {
      auto va = blockCoefficients(pa[i].substituteLinear(map), k);
      auto vb = blockCoefficients(pb[i], k);
      for (std::size_t j = 0; j < cols; ++j) {
        ma(i, j) = va[j];
        mb(i, j) = vb[j];
      }
    }
    if (!(rref(ma).reduced == rref(mb).reduced)) return false;
  }
  return true;
}

}  // namespace leastinterp
