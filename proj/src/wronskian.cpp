#include "leastinterp/wronskian.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "leastinterp/errors.hpp"

namespace leastinterp {

bool isDownwardClosed(const std::vector<MultiIndex>& indices) {
  std::set<MultiIndex, GradedOrder> in(indices.begin(), indices.end());
  for (const auto& mu : indices)
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] == 0) continue;
      MultiIndex below = mu;
      below[i] -= 1;
      if (!in.count(below)) return false;
    }
  return true;
}

YoungLikeSet::YoungLikeSet(std::vector<MultiIndex> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end(), GradedOrder());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty()) throw Error(ErrorCode::InvalidArgument, "wronskian", "empty Young-like set");
  for (const auto& nu : indices_)
    if (nu.size() != indices_[0].size()) throw Error(ErrorCode::InvalidArgument, "wronskian", "mixed arity");
  if (!isDownwardClosed(indices_)) throw Error(ErrorCode::InvalidArgument, "wronskian", "set is not downward closed");
}

bool YoungLikeSet::contains(const MultiIndex& nu) const {
  return std::binary_search(indices_.begin(), indices_.end(), nu, GradedOrder());
}

std::string YoungLikeSet::toString() const {
  std::string s = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ",";
    s += indices_[i].toString();
  }
  return s + "}";
}

std::vector<YoungLikeSet> enumerateYoungLike(std::size_t n, std::size_t m, std::size_t cap) {
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "wronskian", "need n >= 1 and m >= 1");
  auto setLess = [](const std::vector<MultiIndex>& a, const std::vector<MultiIndex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), GradedOrder());
  };
  std::set<std::vector<MultiIndex>, decltype(setLess)> level(setLess);
  level.insert({MultiIndex(n)});
  for (std::size_t size = 1; size < m; ++size) {
    std::set<std::vector<MultiIndex>, decltype(setLess)> next(setLess);
    for (const auto& s : level) {
      std::set<MultiIndex, GradedOrder> in(s.begin(), s.end());
      std::set<MultiIndex, GradedOrder> addable;
      for (const auto& nu : s)
        for (std::size_t i = 0; i < n; ++i) {
          MultiIndex mu = nu + MultiIndex::unit(n, i);
          if (in.count(mu)) continue;
          bool ok = true;
          for (std::size_t j = 0; j < n && ok; ++j) {
            if (mu[j] == 0) continue;
            MultiIndex below = mu;
            below[j] -= 1;
            ok = in.count(below) > 0;
          }
          if (ok) addable.insert(mu);
        }
      for (const auto& mu : addable) {
        auto grown = s;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), mu, GradedOrder()), mu);
        next.insert(std::move(grown));
        if (next.size() > cap)
          throw Error(ErrorCode::CombinatorialBlowup, "wronskian",
                      "more than " + std::to_string(cap) + " Young-like sets of size " + std::to_string(size + 1));
      }
    }
    level = std::move(next);
  }
  std::vector<YoungLikeSet> out;
  for (const auto& s : level) out.emplace_back(s);
  return out;
}

namespace {

void requireSameBase(std::span<const Jet> fs) {
  for (const auto& f : fs)
    if (f.basePoint() != fs[0].basePoint())
      throw Error(ErrorCode::InvalidArgument, "wronskian", "jets at different base points");
}

}  // namespace

Jet generalizedWronskian(std::span<const Jet> fs, const YoungLikeSet& y) {
  std::size_t m = fs.size();
  if (m == 0 || y.size() != m) throw Error(ErrorCode::InvalidArgument, "wronskian", "|Y| must equal the family size");
  if (m > 16) throw Error(ErrorCode::CombinatorialBlowup, "wronskian", "Wronskian jets are limited to 16 functions");
  requireSameBase(fs);
  std::vector<std::vector<Jet>> e(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& nu : y.indices()) {
      if (!fs[i].exact() && static_cast<int>(nu.degree()) > fs[i].order())
        throw Error(ErrorCode::TruncationInsufficient, "wronskian", "derivative order exceeds truncation order");
      e[i].push_back(fs[i].normalizedDerivative(nu));
    }
  // Laplace expansion over column subsets: d[mask] is the minor of the first popcount(mask) rows.
  const auto& base = fs[0].basePoint();
  std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::optional<Jet>> d(full + 1);
  int cap = 0;
  for (const auto& row : e)
    for (const auto& x : row) cap = std::max(cap, x.order());
  d[0] = Jet::constant(base, Scalar(1), cap);
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (!d[mask]) continue;
    std::size_t r = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < m; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const Jet& entry = e[r][c];
      if (entry.exact() && entry.isZeroThroughOrder()) continue;
      std::size_t above = static_cast<std::size_t>(std::popcount(mask >> (c + 1)));
      Jet term = entry * *d[mask];
      if (above % 2) term = -term;
      std::size_t next = mask | (std::size_t{1} << c);
      if (d[next])
        *d[next] += term;
      else
        d[next] = term;
    }
  }
  if (!d[full]) return Jet(base, cap);
  return *d[full];
}

Scalar wronskianAtBase(std::span<const Jet> fs, const YoungLikeSet& y) {
  std::size_t m = fs.size();
  if (m == 0 || y.size() != m) throw Error(ErrorCode::InvalidArgument, "wronskian", "|Y| must equal the family size");
  requireSameBase(fs);
  Matrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < m; ++c) a(i, c) = fs[i].coefficient(y.indices()[c]);
  return determinant(a);
}

const char* genericRankSourceName(GenericRankSource s) {
  switch (s) {
    case GenericRankSource::Sampled: return "sampled";
    case GenericRankSource::OneVariable: return "one-variable";
    case GenericRankSource::LineRestriction: return "line-restriction";
  }
  return "unknown";
}

ScalarSampler::ScalarSampler(std::uint64_t seed) : engine_(seed) {}

// The engine's output sequence is fixed by the standard; distributions are not, so map by hand.
std::uint64_t ScalarSampler::next() { return engine_(); }

long ScalarSampler::integer(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

Scalar ScalarSampler::rational(long maxNum, long maxDen) {
  long num = integer(-maxNum, maxNum);
  long den = integer(1, maxDen);
  return Scalar::fraction(num, den);
}

Scalar ScalarSampler::gaussian(long maxNum, long maxDen) {
  Scalar re = rational(maxNum, maxDen);
  Scalar im = rational(maxNum, maxDen);
  return re + im * Scalar::imaginaryUnit();
}

namespace {

// Ranks of column prefixes (degree <= k) of the jet matrix of gens at their base point.
std::vector<std::size_t> prefixRanks(const std::vector<Jet>& gens, int kMax) {
  std::size_t n = gens[0].nvars();
  int avail = kMax;
  bool allExact = true;
  int maxDeg = 0;
  for (const auto& g : gens) {
    if (g.exact()) {
      maxDeg = std::max(maxDeg, g.degree());
    } else {
      allExact = false;
      if (g.order() < kMax)
        throw Error(ErrorCode::TruncationInsufficient, "wronskian",
                    "rank profile up to order " + std::to_string(kMax) + " needs generators of at least that order");
    }
  }
  if (allExact) avail = std::min(kMax, maxDeg);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    std::vector<Scalar> row;
    for (int k = 0; k <= avail; ++k) {
      if (k <= g.order()) {
        const auto& b = g.block(k);
        row.insert(row.end(), b.begin(), b.end());
      } else {
        row.resize(row.size() + blockSize(n, static_cast<std::size_t>(k)));
      }
    }
    rows.push_back(std::move(row));
  }
  Echelon e = rref(Matrix::fromRows(rows));
  std::vector<std::size_t> out;
  std::size_t end = 0;
  for (int k = 0; k <= kMax; ++k) {
    if (k <= avail) end += blockSize(n, static_cast<std::size_t>(k));
    std::size_t r = 0;
    for (auto p : e.pivots)
      if (p < end) ++r;
    out.push_back(r);
  }
  return out;
}

// Power series in one variable, known modulo eps^prec.
struct Series {
  std::vector<Scalar> c;  // coefficients below prec; missing entries are zero
  int prec = 0;

  int valuation() const {
    for (std::size_t i = 0; i < c.size() && static_cast<int>(i) < prec; ++i)
      if (!c[i].isZero()) return static_cast<int>(i);
    return prec;
  }
  const Scalar& at(int i) const {
    static const Scalar zero;
    return i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : zero;
  }
};

Series mulSeries(const Series& a, const Series& b) {
  int va = a.valuation(), vb = b.valuation();
  Series r;
  r.prec = std::max(0, std::min(a.prec + vb, b.prec + va));
  r.c.resize(static_cast<std::size_t>(r.prec));
  for (int i = va; i < a.prec; ++i) {
    if (a.at(i).isZero()) continue;
    for (int j = vb; j < b.prec && i + j < r.prec; ++j)
      if (!b.at(j).isZero()) r.c[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
  }
  return r;
}

Series subSeries(const Series& a, const Series& b) {
  Series r;
  r.prec = std::min(a.prec, b.prec);
  r.c.resize(static_cast<std::size_t>(std::max(r.prec, 0)));
  for (int i = 0; i < r.prec; ++i) r.c[static_cast<std::size_t>(i)] = a.at(i) - b.at(i);
  return r;
}

// (e / eps^v) / (p / eps^v) where v = valuation(p) and e has valuation >= v when known.
Series divideSeries(const Series& e, const Series& p, int v) {
  Series num, den;
  for (int i = v; i < e.prec; ++i) num.c.push_back(e.at(i));
  num.prec = std::max(0, e.prec - v);
  for (int i = v; i < p.prec; ++i) den.c.push_back(p.at(i));
  den.prec = p.prec - v;
  Series q;
  q.prec = std::min(num.prec, den.prec);
  q.c.resize(static_cast<std::size_t>(std::max(q.prec, 0)));
  Scalar inv = den.at(0).inverse();
  for (int i = 0; i < q.prec; ++i) {
    Scalar s = num.at(i);
    for (int j = 1; j <= i; ++j)
      if (!den.at(j).isZero()) s -= den.at(j) * q.c[static_cast<std::size_t>(i - j)];
    q.c[static_cast<std::size_t>(i)] = s * inv;
  }
  return q;
}

// Rank over Laurent series of a matrix of truncated series; a lower bound, exact when precision suffices.
std::size_t seriesRank(std::vector<std::vector<Series>> m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<bool> rowUsed(rows, false), colUsed(cols, false);
  std::size_t rank = 0;
  while (true) {
    int best = -1;
    std::size_t pr = 0, pc = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (rowUsed[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (colUsed[c]) continue;
        int v = m[r][c].valuation();
        if (v < m[r][c].prec && (best < 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    }
    if (best < 0) break;
    rowUsed[pr] = true;
    colUsed[pc] = true;
    ++rank;
    for (std::size_t r = 0; r < rows; ++r) {
      if (rowUsed[r]) continue;
      Series f = divideSeries(m[r][pc], m[pr][pc], best);
      for (std::size_t c = 0; c < cols; ++c)
        if (!colUsed[c]) m[r][c] = subSeries(m[r][c], mulSeries(f, m[pr][c]));
    }
  }
  return rank;
}

std::vector<std::size_t> lineRestrictedRanks(const FunctionSpace& z, int kMax, ScalarSampler& sampler) {
  std::size_t n = z.nvars();
  int K = z.commonOrder();
  std::vector<Scalar> dir(n);
  for (auto& d : dir) d = sampler.gaussian(9, 4);
  std::vector<MultiIndex> cols = monomialsUpTo(n, static_cast<std::size_t>(kMax));
  std::vector<std::vector<Series>> full;
  for (const auto& g : z.generators()) {
    Jet gk = g.exact() ? g.withCapacity(std::max(K, g.degree())).truncated(K) : g.truncated(K);
    std::vector<Series> row;
    for (const auto& nu : cols) {
      Series s;
      s.prec = K - static_cast<int>(nu.degree()) + 1;
      s.c.resize(static_cast<std::size_t>(s.prec));
      for (int d = static_cast<int>(nu.degree()); d <= K; ++d)
        for (const auto& mu : monomialsOfDegree(n, static_cast<std::size_t>(d))) {
          if (!nu.dividesInto(mu)) continue;
          const Scalar& c = gk.coefficient(mu);
          if (c.isZero()) continue;
          Scalar term = c * Scalar(mpq_class(multiBinomial(mu, nu)));
          MultiIndex delta = mu - nu;
          for (std::size_t i = 0; i < n; ++i) term *= power(dir[i], delta[i]);
          s.c[static_cast<std::size_t>(d - static_cast<int>(nu.degree()))] += term;
        }
      row.push_back(std::move(s));
    }
    full.push_back(std::move(row));
  }
  std::vector<std::size_t> out;
  for (int k = 0; k <= kMax; ++k) {
    std::size_t ncols = 0;
    while (ncols < cols.size() && static_cast<int>(cols[ncols].degree()) <= k) ++ncols;
    std::vector<std::vector<Series>> sub;
    for (const auto& row : full) sub.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ncols));
    out.push_back(seriesRank(std::move(sub)));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> rankProfileAt(const FunctionSpace& z, int kMax) { return prefixRanks(z.generators(), kMax); }

JetRankProfile jetRankProfile(const FunctionSpace& z, int kMax, const SamplingOptions& opts) {
  if (kMax < 0) throw Error(ErrorCode::InvalidArgument, "wronskian", "negative kMax");
  JetRankProfile p;
  p.ranks = rankProfileAt(z, kMax);
  p.seed = opts.seed;
  std::size_t m = z.dimension(), n = z.nvars();
  ScalarSampler sampler(opts.seed);
  if (n == 1) {
    p.source = GenericRankSource::OneVariable;
    for (int k = 0; k <= kMax; ++k) p.genericRanks.push_back(std::min(m, static_cast<std::size_t>(k) + 1));
  } else if (z.exact()) {
    p.source = GenericRankSource::Sampled;
    p.samples = opts.samples;
    p.genericRanks = p.ranks;
    for (std::size_t s = 0; s < opts.samples; ++s) {
      std::vector<Scalar> point(n);
      for (auto& x : point) x = sampler.gaussian(12, 6);
      std::vector<Jet> moved;
      for (const auto& g : z.generators()) moved.push_back(g.recentered(point));
      auto r = prefixRanks(moved, kMax);
      for (std::size_t k = 0; k < r.size(); ++k) p.genericRanks[k] = std::max(p.genericRanks[k], r[k]);
    }
  } else {
    p.source = GenericRankSource::LineRestriction;
    p.samples = 1;
    p.genericRanks = lineRestrictedRanks(z, kMax, sampler);
    for (std::size_t k = 0; k < p.ranks.size(); ++k) p.genericRanks[k] = std::max(p.genericRanks[k], p.ranks[k]);
  }
  if (!z.exact()) p.verifiedUpTo = z.commonOrder();
  for (int k = 0; k <= kMax; ++k) {
    std::size_t bound = std::min(m, binomial(n + static_cast<std::size_t>(k), static_cast<std::size_t>(k)));
    p.proved.push_back(p.source == GenericRankSource::OneVariable || p.genericRanks[static_cast<std::size_t>(k)] == bound);
  }
  return p;
}

namespace {

std::optional<YoungLikeSet> findWitness(const FunctionSpace& z) {
  std::size_t m = z.dimension(), n = z.nvars();
  const auto& gens = z.generators();
  int top = static_cast<int>(m) - 1;
  if (z.exact()) {
    int maxDeg = 0;
    for (const auto& g : gens) maxDeg = std::max(maxDeg, g.degree());
    top = std::min(top, maxDeg);
  }
  top = std::min(top, z.exact() ? top : z.commonOrder());
  // Pivot columns of the jet matrix form an invertible minor; use them when they are an order ideal.
  std::vector<MultiIndex> cols = monomialsUpTo(n, static_cast<std::size_t>(top));
  Matrix a(m, cols.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) a(i, c) = gens[i].coefficient(cols[c]);
  Echelon e = rref(a);
  if (e.pivots.size() == m) {
    std::vector<MultiIndex> chosen;
    for (auto p : e.pivots) chosen.push_back(cols[p]);
    if (isDownwardClosed(chosen)) {
      YoungLikeSet y(chosen);
      if (!wronskianAtBase(gens, y).isZero()) return y;
    }
  }
  try {
    for (const auto& y : enumerateYoungLike(n, m, 5000)) {
      bool reachable = true;
      for (const auto& nu : y.indices())
        if (!z.exact() && static_cast<int>(nu.degree()) > z.commonOrder()) reachable = false;
      if (reachable && !wronskianAtBase(gens, y).isZero()) return y;
    }
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CombinatorialBlowup) throw;
  }
  return std::nullopt;
}

}  // namespace

BundleCertificate isBundlePoint(const FunctionSpace& z, const SamplingOptions& opts) {
  BundleCertificate cert;
  int kMax = static_cast<int>(z.dimension()) - 1;
  cert.profile = jetRankProfile(z, kMax, opts);
  cert.bundle = true;
  for (std::size_t k = 0; k < cert.profile.ranks.size(); ++k)
    if (cert.profile.ranks[k] < cert.profile.genericRanks[k]) {
      cert.bundle = false;
      cert.firstDeficientOrder = static_cast<int>(k);
      break;
    }
  if (cert.bundle) cert.witness = findWitness(z);
  return cert;
}

}  // namespace leastinterp
