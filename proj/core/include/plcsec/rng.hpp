#pragma once

#include <cstdint>
#include <random>

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

namespace plcsec {

/// Seedable, splittable random stream. Substreams are derived from the key
/// by a counter-based hash, so stream (seed, i, j) is the same no matter how
/// work is distributed across threads. Not thread-safe; one owner at a time.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Independent child stream identified by `index`.
  RandomStream substream(std::uint64_t index) const;

  double standard_normal() { return normal_(engine_); }
  bool bernoulli(double p) { return boost::random::bernoulli_distribution<double>(p)(engine_); }

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
  boost::random::normal_distribution<double> normal_;
};

/// Per-trial random variables; each gets its own substream so that systems
/// sharing a seed see common random numbers variable by variable.
enum class StreamRole : std::uint64_t {
  source_link = 1,
  destination_links = 2,
  eavesdropper_link = 3,
  destination_noise = 4,
  eavesdropper_noise = 5,
};

inline RandomStream role_stream(const RandomStream& parent, StreamRole role) {
  return parent.substream(static_cast<std::uint64_t>(role));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace plcsec
