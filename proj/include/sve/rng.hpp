#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sve {

/// SplitMix64 finalizer (Vigna, 2015). Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct RngSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

/// Counter-based generator keyed by (master_seed, stream_id).
///
/// The state is literally the key plus a draw counter, so the mapping from
/// (master_seed, stream_id) to generator state is injective by construction.
/// Output i is
///
///   mix64( mix64(i * 2^64/phi + master_seed) ^ stream_id )
///
/// i.e. a SplitMix64 sequence whose words are re-keyed by the stream id and
/// finalized again. Streams are value types: cloneable, sendable between
/// threads, no global state. Not cryptographic; statistical quality is
/// checked by the goodness-of-fit tests in the suite.
class CounterRng {
 public:
  CounterRng(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_(master_seed), stream_(stream_id) {}
  explicit CounterRng(RngSeed seed) : CounterRng(seed.master_seed, seed.stream_id) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (counter_++) * 0x9E3779B97F4A7C15ULL + master_;
    return mix64(mix64(z) ^ stream_);
  }

  /// Uniform draw strictly inside (0, 1), 53 significant bits.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t master_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

namespace detail {

// Sequential-search inversion of the binomial CDF from k = 0, consuming a
// single uniform. Requires pmf(0) = (1-p)^n to be representable, which the
// caller guarantees.
inline long long binomial_inversion(long long n, double p, double u) {
  const double ratio = p / (1.0 - p);
  double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
  double cdf = pmf;
  long long k = 0;
  while (u > cdf && k < n) {
    ++k;
    pmf *= ratio * static_cast<double>(n - k + 1) / static_cast<double>(k);
    cdf += pmf;
  }
  return k;
}

}  // namespace detail

/// Exact Binomial(n, p) sampling, deterministic given the stream state.
/// p is reflected to p <= 1/2 first; small -n*log(1-p) uses single-uniform
/// CDF inversion, anything larger falls back to counting Bernoulli draws.
inline long long binomial_sample(long long n, double p, CounterRng& rng) {
  if (n < 1) throw std::invalid_argument("binomial_sample: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("binomial_sample: p must be in [0, 1]");
  if (p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial_sample(n, 1.0 - p, rng);

  const double neg_log_q = -static_cast<double>(n) * std::log1p(-p);
  if (neg_log_q < 600.0)
    return detail::binomial_inversion(n, p, rng.next_uniform());

  long long k = 0;
  for (long long i = 0; i < n; ++i)
    if (rng.next_uniform() < p) ++k;
  return k;
}

inline long long binomial_sample(long long n, double p, RngSeed seed) {
  CounterRng rng(seed);
  return binomial_sample(n, p, rng);
}

}  // namespace sve
