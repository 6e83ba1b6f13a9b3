#include "leastinterp/multi_index.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "leastinterp/errors.hpp"

namespace leastinterp {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  MultiIndex m(n);
  m.e_[i] = 1;
  return m;
}

unsigned MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0U); }

mpz_class MultiIndex::factorial() const {
  mpz_class r = 1;
  for (unsigned v : e_) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), v);
    r *= f;
  }
  return r;
}

bool MultiIndex::dividesInto(const MultiIndex& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (!o.dividesInto(*this)) throw Error(ErrorCode::InvalidArgument, "core", "negative exponent");
  MultiIndex r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

std::string MultiIndex::toString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

bool GradedOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

mpz_class binomialBig(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::size_t blockSize(std::size_t n, std::size_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n + k - 1, k);
}

std::size_t blockIndex(const MultiIndex& nu) {
  std::size_t n = nu.size();
  std::size_t rem = nu.degree();
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t e = rem; e > nu[i]; --e) idx += blockSize(n - i - 1, rem - e);
    rem -= nu[i];
  }
  return idx;
}

namespace {

void enumerate(std::size_t n, std::size_t k, std::vector<unsigned>& prefix, std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(static_cast<unsigned>(k));
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t e = k + 1; e-- > 0;) {
    prefix.push_back(static_cast<unsigned>(e));
    enumerate(n, k - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<MultiIndex>& monomialsOfDegree(std::size_t n, std::size_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::vector<MultiIndex>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) {
    slot = std::make_unique<std::vector<MultiIndex>>();
    if (n == 0) {
      if (k == 0) slot->emplace_back(0);
    } else {
      std::vector<unsigned> prefix;
      enumerate(n, k, prefix, *slot);
    }
  }
  return *slot;
}

std::vector<MultiIndex> monomialsUpTo(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  for (std::size_t d = 0; d <= k; ++d) {
    const auto& block = monomialsOfDegree(n, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

mpz_class multiBinomial(const MultiIndex& mu, const MultiIndex& nu) {
  mpz_class r = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) r *= binomialBig(mu[i], nu[i]);
  return r;
}

}  // namespace leastinterp
