#include "leastinterp/least.hpp"

#include <algorithm>
#include <map>

#include "leastinterp/errors.hpp"

namespace leastinterp {

namespace {

std::vector<std::size_t> blockOffsets(std::size_t n, int order) {
  std::vector<std::size_t> off(static_cast<std::size_t>(order) + 2, 0);
  for (int k = 0; k <= order; ++k)
    off[static_cast<std::size_t>(k) + 1] = off[static_cast<std::size_t>(k)] + blockSize(n, static_cast<std::size_t>(k));
  return off;
}

std::vector<Scalar> flatten(const Jet& j, int order) {
  std::vector<Scalar> row;
  for (int k = 0; k <= order; ++k) {
    if (k <= j.order()) {
      const auto& b = j.block(k);
      row.insert(row.end(), b.begin(), b.end());
    } else {
      row.resize(row.size() + blockSize(j.nvars(), static_cast<std::size_t>(k)));
    }
  }
  return row;
}

}  // namespace

FunctionSpace::FunctionSpace(std::vector<Scalar> base, std::vector<Jet> generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorCode::InvalidArgument, "least", "function space without generators");
  int exactCap = 0;
  int inexactOrder = -1;
  for (const auto& g : generators_) {
    if (g.basePoint() != base_) throw Error(ErrorCode::InvalidArgument, "least", "generator at a different base point");
    if (g.exact()) {
      exactCap = std::max(exactCap, std::max(g.degree(), 0));
    } else {
      exact_ = false;
      inexactOrder = inexactOrder < 0 ? g.order() : std::min(inexactOrder, g.order());
    }
  }
  order_ = exact_ ? exactCap : inexactOrder;
  std::size_t r = rank(coefficientMatrix());
  if (r < generators_.size()) {
    if (exact_) throw Error(ErrorCode::DependentGenerators, "least", "generators are linearly dependent");
    throw Error(ErrorCode::TruncationInsufficient, "least",
                "generators are dependent up to order " + std::to_string(order_) + "; raise the truncation order");
  }
}

Matrix FunctionSpace::coefficientMatrix() const {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : generators_) rows.push_back(flatten(g, order_));
  return Matrix::fromRows(rows);
}

LeastSpace::LeastSpace(std::size_t nvars, const std::vector<Poly>& homogeneous) : nvars_(nvars) {
  std::map<int, std::vector<std::vector<Scalar>>> byDegree;
  for (const auto& p : homogeneous) {
    if (p.nvars() != nvars) throw Error(ErrorCode::InvalidArgument, "least", "variable count mismatch");
    if (p.isZero()) continue;
    if (!p.isHomogeneous()) throw Error(ErrorCode::InvalidArgument, "least", "least-space elements must be homogeneous");
    byDegree[p.degree()].push_back(blockCoefficients(p, p.degree()));
  }
  for (auto& [k, rows] : byDegree) blocks_.push_back({k, rref(Matrix::fromRows(rows))});
}

std::size_t LeastSpace::dimension() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b.basis.pivots.size();
  return d;
}

int LeastSpace::maxDegree() const { return blocks_.empty() ? -1 : blocks_.back().degree; }

const LeastSpace::Block* LeastSpace::blockOfDegree(int k) const {
  for (const auto& b : blocks_)
    if (b.degree == k) return &b;
  return nullptr;
}

std::size_t LeastSpace::blockDimension(int k) const {
  const Block* b = blockOfDegree(k);
  return b ? b->basis.pivots.size() : 0;
}

std::vector<Poly> LeastSpace::basis() const {
  std::vector<Poly> out;
  for (const auto& b : blocks_)
    for (std::size_t r = 0; r < b.basis.reduced.rows(); ++r)
      out.push_back(polyFromBlock(nvars_, b.degree, b.basis.reduced.row(r)));
  return out;
}

bool LeastSpace::contains(const Poly& p) const {
  if (p.nvars() != nvars_) throw Error(ErrorCode::InvalidArgument, "least", "variable count mismatch");
  for (int k = std::max(p.lowDegree(), 0); k <= p.degree(); ++k) {
    Poly part = p.homogeneousPart(k);
    if (part.isZero()) continue;
    const Block* b = blockOfDegree(k);
    if (!b || !inRowSpace(b->basis, blockCoefficients(part, k))) return false;
  }
  return true;
}

bool LeastSpace::isMonomial() const {
  for (const auto& b : blocks_)
    for (std::size_t r = 0; r < b.basis.reduced.rows(); ++r) {
      std::size_t nonzero = 0;
      for (std::size_t c = 0; c < b.basis.reduced.cols(); ++c)
        if (!b.basis.reduced(r, c).isZero()) ++nonzero;
      if (nonzero != 1) return false;
    }
  return true;
}

std::vector<MultiIndex> LeastSpace::staircase() const {
  std::vector<MultiIndex> out;
  for (const auto& b : blocks_) {
    const auto& monos = monomialsOfDegree(nvars_, static_cast<std::size_t>(b.degree));
    for (auto p : b.basis.pivots) out.push_back(monos[p]);
  }
  return out;
}

std::vector<std::string> LeastSpace::toStrings(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  for (const auto& p : basis()) out.push_back(p.toString(names));
  return out;
}

bool operator==(const LeastSpace& a, const LeastSpace& b) {
  if (a.nvars_ != b.nvars_ || a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    if (a.blocks_[i].degree != b.blocks_[i].degree) return false;
    if (!(a.blocks_[i].basis.reduced == b.blocks_[i].basis.reduced)) return false;
  }
  return true;
}

LeastSpace computeLeastSpace(const FunctionSpace& z) {
  std::size_t n = z.nvars();
  int order = z.commonOrder();
  Matrix m = z.coefficientMatrix();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto off = blockOffsets(n, order);

  std::vector<bool> active(rows.size(), true);
  std::size_t remaining = rows.size();
  std::vector<Poly> parts;
  for (int k = 0; k <= order && remaining > 0; ++k) {
    std::vector<std::size_t> chosen;
    for (std::size_t c = off[static_cast<std::size_t>(k)]; c < off[static_cast<std::size_t>(k) + 1]; ++c) {
      std::size_t pivot = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (active[r] && !rows[r][c].isZero()) {
          pivot = r;
          break;
        }
      if (pivot == rows.size()) continue;
      active[pivot] = false;
      --remaining;
      chosen.push_back(pivot);
      Scalar inv = rows[pivot][c].inverse();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!active[r] || rows[r][c].isZero()) continue;
        Scalar f = rows[r][c] * inv;
        for (std::size_t j = c; j < rows[r].size(); ++j)
          if (!rows[pivot][j].isZero()) rows[r][j] -= f * rows[pivot][j];
      }
    }
    for (auto r : chosen) {
      std::vector<Scalar> blk(rows[r].begin() + static_cast<std::ptrdiff_t>(off[static_cast<std::size_t>(k)]),
                              rows[r].begin() + static_cast<std::ptrdiff_t>(off[static_cast<std::size_t>(k) + 1]));
      parts.push_back(polyFromBlock(n, k, blk));
    }
  }
  if (remaining > 0) {
    if (z.exact()) throw Error(ErrorCode::DependentGenerators, "least", "generators are linearly dependent");
    throw Error(ErrorCode::TruncationInsufficient, "least",
                "a combination of generators vanishes through order " + std::to_string(order));
  }
  LeastSpace l(n, parts);
  if (l.dimension() != z.dimension())
    throw Error(ErrorCode::ConsistencyViolation, "least", "least space dimension differs from the space dimension");
  return l;
}

DInvariance isDInvariant(const LeastSpace& l) {
  for (const auto& p : l.basis()) {
    for (std::size_t i = 0; i < l.nvars(); ++i) {
      Poly d = partialDerivative(p, i);
      if (!l.contains(d)) return {false, DInvarianceWitness{p, i, d}};
    }
  }
  return {true, std::nullopt};
}

LeastSpace applyLinearSubstitution(const LeastSpace& l, const Matrix& J) {
  if (J.rows() != l.nvars() || J.cols() != l.nvars())
    throw Error(ErrorCode::DimensionMismatch, "least", "substitution matrix must be n x n");
  if (determinant(J).isZero()) throw Error(ErrorCode::SingularMatrix, "least", "substitution matrix is singular");
  std::vector<Poly> images;
  for (const auto& p : l.basis()) images.push_back(p.substituteLinear(J));
  return LeastSpace(l.nvars(), images);
}

std::vector<std::string> dualNames(const std::vector<std::string>& sourceNames) {
  static const std::map<char, std::string> greek = {{'s', "sigma"}, {'t', "tau"}, {'x', "xi"},
                                                    {'y', "eta"},   {'z', "zeta"}, {'w', "omega"}};
  std::vector<std::string> out;
  for (const auto& name : sourceNames) {
    auto it = name.empty() ? greek.end() : greek.find(name[0]);
    bool digitsOnly = std::all_of(name.begin() + (name.empty() ? 0 : 1), name.end(),
                                  [](char c) { return c >= '0' && c <= '9'; });
    if (it != greek.end() && digitsOnly)
      out.push_back(it->second + name.substr(1));
    else
      out.push_back("D" + name);
  }
  return out;
}

}  // namespace leastinterp
