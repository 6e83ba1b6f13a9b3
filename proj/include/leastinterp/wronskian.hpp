#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "leastinterp/least.hpp"

namespace leastinterp {

// Finite order ideal of N^n.
class YoungLikeSet {
 public:
  // Throws InvalidArgument unless the set is downward closed.
  explicit YoungLikeSet(std::vector<MultiIndex> indices);

  std::size_t size() const { return indices_.size(); }
  std::size_t nvars() const { return indices_.empty() ? 0 : indices_[0].size(); }
  // Sorted in GradedOrder.
  const std::vector<MultiIndex>& indices() const { return indices_; }
  bool contains(const MultiIndex& nu) const;
  std::string toString() const;

  friend bool operator==(const YoungLikeSet& a, const YoungLikeSet& b) { return a.indices_ == b.indices_; }

 private:
  std::vector<MultiIndex> indices_;
};

bool isDownwardClosed(const std::vector<MultiIndex>& indices);

constexpr std::size_t kDefaultYoungCap = 200000;

std::vector<YoungLikeSet> enumerateYoungLike(std::size_t n, std::size_t m, std::size_t cap = kDefaultYoungCap);

// det[u_nu(f_i)] with columns nu in Y, u_nu = (1/nu!) d^nu.
Jet generalizedWronskian(std::span<const Jet> fs, const YoungLikeSet& y);
// Constant term of the Wronskian at the common base point.
Scalar wronskianAtBase(std::span<const Jet> fs, const YoungLikeSet& y);

struct SamplingOptions {
  std::uint64_t seed = 20240531;
  std::size_t samples = 5;
};

enum class GenericRankSource {
  Sampled,          // max over pseudorandom points and the query point (exact polynomial generators)
  OneVariable,      // min(m, k+1), forced by the Wronskian in one variable
  LineRestriction,  // rank over Laurent series along a pseudorandom line through the base point
};

const char* genericRankSourceName(GenericRankSource s);

struct JetRankProfile {
  std::vector<std::size_t> ranks;         // r_k(b), k = 0..kMax
  std::vector<std::size_t> genericRanks;  // estimated generic r_k
  std::vector<bool> proved;               // generic value reaches the trivial upper bound or is forced
  GenericRankSource source = GenericRankSource::Sampled;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::optional<int> verifiedUpTo;  // set when generators are truncated series
};

std::vector<std::size_t> rankProfileAt(const FunctionSpace& z, int kMax);
JetRankProfile jetRankProfile(const FunctionSpace& z, int kMax, const SamplingOptions& opts = {});

struct BundleCertificate {
  bool bundle = false;
  JetRankProfile profile;
  std::optional<int> firstDeficientOrder;
  // A Young-like set whose Wronskian does not vanish at the base point, when one was found.
  std::optional<YoungLikeSet> witness;
};

// Bundle point: r_k(b) equals the generic rank for every k <= m-1.
BundleCertificate isBundlePoint(const FunctionSpace& z, const SamplingOptions& opts = {});

// Deterministic pseudorandom Gaussian rationals, independent of the standard library's distributions.
class ScalarSampler {
 public:
  explicit ScalarSampler(std::uint64_t seed);
  long integer(long lo, long hi);
  Scalar rational(long maxNum, long maxDen);
  Scalar gaussian(long maxNum, long maxDen);

 private:
  std::uint64_t next();
  std::mt19937_64 engine_;
};

}  // namespace leastinterp
